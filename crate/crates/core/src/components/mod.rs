//! Connected components of strata: which exist, a cylindrical representative
//! of each, hyperelliptic single-cylinder forms, and a classifier.

mod classify;
mod hyperelliptic;
mod reps;
mod stratum;

use alloc::vec;
use alloc::vec::Vec;

pub use classify::{classify, Classifier, Enumerator};
pub use hyperelliptic::is_hyperelliptic_diagram;
pub use reps::representative;
pub use stratum::{parse_component, strata_up_to, ComponentId, ComponentLabel, StratumSpec};

use crate::surface::Holonomy;
use crate::Error;
use ComponentLabel::*;

fn is_abelian_hyp_stratum(s: &StratumSpec) -> bool {
    let z = s.zeros();
    z.len() == 1 || (z.len() == 2 && z[0] == z[1])
}

/// Degrees (poles included) of a stratum carrying a hyperelliptic component
/// in Lanneau's list.
fn is_quadratic_hyp_family(sorted: &[i32]) -> bool {
    let odd = |d: i32| d % 2 != 0;
    let twice_odd = |d: i32| d >= 2 && d % 4 == 2;
    match *sorted {
        [a, b, c, d] => {
            // Sorted decreasing, so the pairs are adjacent.
            a == b && c == d && odd(a) && odd(c)
        }
        [a, b, c] => (a == b && odd(a) && twice_odd(c)) || (b == c && odd(b) && twice_odd(a)),
        [a, b] => twice_odd(a) && twice_odd(b),
        _ => false,
    }
}

const EMPTY_QUADRATIC: [&[i32]; 4] = [&[], &[1, -1], &[3, 1], &[4]];
const EXCEPTIONAL_QUADRATIC: [&[i32]; 4] = [&[9, -1], &[6, 3, -1], &[3, 3, 3, -1], &[12]];

fn labels_of(s: &StratumSpec) -> Vec<ComponentLabel> {
    let g = s.genus();
    let sorted = s.sorted_degrees();
    match s.holonomy() {
        Holonomy::Abelian => {
            let even = s.zeros().iter().all(|d| d % 2 == 0);
            let hyp = is_abelian_hyp_stratum(s);
            match g {
                2 => vec![Hyperelliptic],
                3 if hyp && even => vec![Hyperelliptic, OddSpin],
                3 => vec![Connected],
                _ if hyp && even => vec![Hyperelliptic, EvenSpin, OddSpin],
                _ if even => vec![EvenSpin, OddSpin],
                _ if hyp => vec![Hyperelliptic, NonHyperelliptic],
                _ => vec![Connected],
            }
        }
        Holonomy::Quadratic => {
            if EMPTY_QUADRATIC.contains(&sorted.as_slice()) {
                return vec![];
            }
            match g {
                0 | 1 => vec![Connected],
                2 if sorted == [6, -1, -1] || sorted == [3, 3, -1, -1] => vec![Hyperelliptic, NonHyperelliptic],
                2 => vec![Connected],
                _ if EXCEPTIONAL_QUADRATIC.contains(&sorted.as_slice()) => vec![Irr, Reg],
                _ if is_quadratic_hyp_family(&sorted) => vec![Hyperelliptic, NonHyperelliptic],
                _ => vec![Connected],
            }
        }
    }
}

/// The connected components of a stratum; empty for the four empty strata.
pub fn components_of(s: &StratumSpec) -> Vec<ComponentId> {
    labels_of(s).into_iter().map(|label| ComponentId { stratum: s.clone(), label }).collect()
}

/// Spin parity of the hyperelliptic component of `H(2g-2)` or `H(2k,2k)`.
pub fn hyp_spin_parity_closed_form(s: &StratumSpec) -> Result<u8, Error> {
    if s.holonomy() != Holonomy::Abelian || !is_abelian_hyp_stratum(s) || s.zeros()[0] % 2 != 0 {
        return Err(Error::NotApplicable);
    }
    let g = s.genus();
    Ok(if s.zeros().len() == 1 { ((g + 1) / 2 % 2) as u8 } else { ((s.zeros()[0] / 2 + 1) % 2) as u8 })
}
