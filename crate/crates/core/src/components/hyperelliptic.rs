use alloc::vec::Vec;

use crate::genperm::{CylinderDiagram, Symbol};
use crate::Error;

fn range(a: usize, b: usize) -> impl DoubleEndedIterator<Item = Symbol> {
    (a as Symbol)..=(b as Symbol)
}

/// The single-cylinder shapes of hyperelliptic components with `n` arcs.
pub(crate) fn hyperelliptic_shapes(n: usize) -> Vec<CylinderDiagram> {
    let mut out = Vec::new();
    let n16 = n as Symbol;
    // Bottom boundary is the top boundary read backwards.
    out.push(CylinderDiagram::new(range(1, n).collect(), range(1, n).rev().collect()).unwrap());
    if n < 2 {
        return out;
    }
    let (a, b) = (n16 - 1, n16);
    for r in 0..=n - 2 {
        let s = n - 2 - r;
        let top: Vec<Symbol> = core::iter::once(a)
            .chain(range(1, s))
            .chain(core::iter::once(a))
            .chain(range(s + 1, s + r))
            .collect();
        let bottom: Vec<Symbol> = range(s + 1, s + r)
            .rev()
            .chain(core::iter::once(b))
            .chain(range(1, s).rev())
            .chain(core::iter::once(b))
            .collect();
        out.push(CylinderDiagram::new(top, bottom).unwrap());
        let w1: Vec<Symbol> = range(1, r + 1).chain(range(1, r + 1)).collect();
        let w2: Vec<Symbol> = range(r + 2, n).chain(range(r + 2, n)).collect();
        out.push(CylinderDiagram::new(w1, w2).unwrap());
    }
    out
}

/// Whether a single-cylinder diagram has one of the shapes forced on
/// hyperelliptic components.
pub fn is_hyperelliptic_diagram(cd: &CylinderDiagram) -> Result<bool, Error> {
    if !cd.is_length_feasible() {
        return Err(Error::LengthInfeasible);
    }
    let key = cd.canonical_key();
    Ok(hyperelliptic_shapes(cd.arc_count()).iter().any(|h| h.canonical_key() == key))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cd(t: &[Symbol], b: &[Symbol]) -> CylinderDiagram {
        CylinderDiagram::new(t.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(is_hyperelliptic_diagram(&cd(&[1, 2, 3], &[3, 2, 1])).unwrap());
        assert!(is_hyperelliptic_diagram(&cd(&[1, 2, 1, 2], &[3, 4, 3, 4])).unwrap());
        // Doubled words with one and two letters: Q(2,-1^2), a genus one stratum.
        assert!(is_hyperelliptic_diagram(&cd(&[1, 1], &[2, 3, 2, 3])).unwrap());
        let nonhyp: crate::GeneralizedPermutation = "0 10 9 10 6 / 6 7 7 8 8 9 0".parse().unwrap();
        assert!(!is_hyperelliptic_diagram(&nonhyp.to_cylinder_diagram().unwrap()).unwrap());
        assert!(is_hyperelliptic_diagram(&cd(&[7, 7], &[9, 9])).unwrap());
        assert!(is_hyperelliptic_diagram(&cd(&[1, 2, 3, 4], &[2, 1, 4, 3])).unwrap());
        assert!(!is_hyperelliptic_diagram(&cd(&[1, 2, 3, 4], &[2, 4, 1, 3])).unwrap());
        assert_eq!(is_hyperelliptic_diagram(&cd(&[1, 1, 2], &[2])), Err(Error::LengthInfeasible));
    }

    #[test]
    fn shape_count() {
        assert_eq!(hyperelliptic_shapes(4).len(), 1 + 2 * 3);
        assert_eq!(hyperelliptic_shapes(1), vec![cd(&[1], &[1])]);
    }
}
