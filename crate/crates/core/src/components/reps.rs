use alloc::vec;
use alloc::vec::Vec;

use super::stratum::{ComponentId, ComponentLabel, StratumSpec};
use super::{labels_of, EXCEPTIONAL_QUADRATIC};
use crate::genperm::{Diagonal, GeneralizedPermutation, Symbol};
use crate::surface::{stratum_of, Holonomy};
use crate::Error;

type Words = (Vec<Symbol>, Vec<Symbol>);

fn sym(v: i64) -> Symbol {
    v as Symbol
}

fn build((top, bottom): Words, erase: &[Symbol]) -> GeneralizedPermutation {
    GeneralizedPermutation::new(top, bottom)
        .and_then(|p| p.erase_symbols(erase))
        .expect("construction tables are consistent")
}

/// Symbols `a (S_{i-1} + m) + c` for `m = 1 .. d_i - 1`, over all groups.
/// Erasing a group contracts the chain joining the zeros merged into `d_i`.
fn erase_set(ds: &[i32], a: i64, c: i64) -> Vec<Symbol> {
    let mut out = Vec::new();
    let mut acc = 0i64;
    for &d in ds {
        for m in 1..d as i64 {
            out.push(sym(a * (acc + m) + c));
        }
        acc += d as i64;
    }
    out
}

fn reversal(n: usize) -> GeneralizedPermutation {
    let top: Vec<Symbol> = (0..n as Symbol).collect();
    let bottom = top.iter().rev().copied().collect();
    GeneralizedPermutation::new(top, bottom).unwrap()
}

/// Principal-stratum permutation of genus `g`, blocks of four.
fn abelian_base(g: i64) -> Words {
    let top = (0..=4 * g - 4).map(sym).collect();
    let mut bottom = vec![4, 3, 2];
    for m in 1..=g - 2 {
        bottom.extend([4 * m + 1, 4 * m + 4, 4 * m + 3, 4 * m + 2].map(sym));
    }
    bottom.extend([1, 0]);
    (top, bottom)
}

/// Permutation for `H(2,...,2)` with blocks of three; `head` opens the bottom line.
fn spin_base(g: i64, head: &[Symbol], first_block: i64) -> Words {
    let top = (0..=3 * g - 3).map(sym).collect();
    let mut bottom = head.to_vec();
    for m in first_block..=g - 2 {
        bottom.extend([3 * m + 1, 3 * m + 3, 3 * m + 2].map(sym));
    }
    bottom.extend([1, 0]);
    (top, bottom)
}

fn odd_base(g: i64) -> Words {
    spin_base(g, &[3, 2], 1)
}

fn even_base(g: i64) -> Words {
    spin_base(g, &[6, 5, 4, 3, 2], 2)
}

/// Genus zero, `p` poles.
fn genus0_base(p: i64) -> Words {
    let top = vec![0, sym(2 * p - 6), sym(2 * p - 6)];
    let mut bottom = Vec::new();
    for m in 1..=p - 4 {
        bottom.extend([2 * m, 2 * m, 2 * m + 1].map(sym));
    }
    bottom.extend((0..p - 3).map(|i| sym(2 * p - 7 - 2 * i)));
    bottom.extend([1, 0]);
    (top, bottom)
}

/// Genus one, `p` poles.
fn genus1_base(p: i64) -> Words {
    let mut top = vec![0, 1];
    for m in 1..p {
        top.extend([2 * m, 2 * m + 1, 2 * m + 1].map(sym));
    }
    let mut bottom: Vec<Symbol> = (1..p).map(|m| sym(2 * m)).collect();
    bottom.extend([1, sym(2 * p), sym(2 * p), 0]);
    (top, bottom)
}

/// Genus two, `p` poles.
fn genus2_base(p: i64) -> Words {
    if p == 0 {
        return (vec![0, 6, 1, 5, 6, 4, 3], vec![1, 2, 3, 4, 2, 5, 0]);
    }
    let top = [0, 2 * p + 6, 1, 2 * p + 5, 2 * p + 6, p + 4, p + 3].map(sym).to_vec();
    let mut bottom: Vec<Symbol> = (1..=p + 4).map(sym).collect();
    for m in 0..p {
        bottom.extend([p + 2 - m, p + 5 + m, p + 5 + m].map(sym));
    }
    bottom.extend([2, 2 * p + 5, 0].map(sym));
    (top, bottom)
}

/// Genus `g >= 3`, `p` poles.
fn genus3_base(g: i64, p: i64) -> Words {
    let mut top = vec![0, 1, 2, 3];
    for k in 0..=g - 3 {
        let (x, y) = (4 * g - 1 + p + 2 * k, 4 * g + p + 2 * k);
        top.extend([4 + 4 * k, x, 7 + 4 * k, y, 6 + 4 * k, x, 5 + 4 * k, y].map(sym));
    }
    for l in 0..p {
        top.extend([4 * g - 4 + l, 6 * g + p - 5 + l, 6 * g + p - 5 + l].map(sym));
    }
    top.push(sym(4 * g + p - 4));
    let (u, v) = (4 * g - 3 + p, 4 * g - 2 + p);
    let mut bottom = [u, 3, v, 2, u, 1, v].map(sym).to_vec();
    bottom.extend((4..=4 * g - 4 + p).map(sym));
    bottom.push(0);
    (top, bottom)
}

/// Single-cylinder permutation of Lanneau's hyperelliptic family.
fn lanneau(r: usize, s: usize) -> GeneralizedPermutation {
    let (a, b) = (sym((r + s + 1) as i64), sym((r + s + 2) as i64));
    let ones = |lo: usize, hi: usize| (lo..=hi).map(|i| sym(i as i64));
    let top: Vec<Symbol> = [0, a].into_iter().chain(ones(1, s)).chain([a]).chain(ones(s + 1, s + r)).collect();
    let bottom: Vec<Symbol> = ones(s + 1, s + r).rev().chain([b]).chain(ones(1, s).rev()).chain([b, 0]).collect();
    GeneralizedPermutation::canonical_from(&top, &bottom).unwrap()
}

/// The part of a Lanneau stratum produced by one parameter: `2j+1` gives
/// `4j+2`, `2j` gives the pair `2j-1, 2j-1`.
fn lanneau_parameter(degrees: &[i32]) -> Option<usize> {
    match *degrees {
        [d] if d >= 2 && d % 4 == 2 => Some((d as usize - 2) / 2 + 1),
        [d, e] if d == e && d % 2 != 0 => Some((d + 1) as usize),
        _ => None,
    }
}

fn hyperelliptic_quadratic(s: &StratumSpec) -> Option<GeneralizedPermutation> {
    let all = s.sorted_degrees();
    let d1 = s.left_degree();
    // The `r` part carries the left endpoint.
    let first: Vec<i32> = if d1 % 2 != 0 { vec![d1, d1] } else { vec![d1] };
    let mut rest = all.clone();
    for d in &first {
        let i = rest.iter().position(|x| x == d)?;
        rest.remove(i);
    }
    let r = lanneau_parameter(&first)?;
    let s_ = lanneau_parameter(&rest)?;
    Some(lanneau(r, s_))
}

const TABLE_ONE: [(ComponentLabel, &[i32], &str); 8] = [
    (ComponentLabel::Irr, &[3, 3, 3, -1], "0 1 2 3 4 5 1 6 2 3 4 5 6 7 / 7 8 8 0"),
    (ComponentLabel::Irr, &[6, 3, -1], "0 1 2 3 4 5 1 2 3 4 5 6 / 6 7 7 0"),
    (ComponentLabel::Irr, &[9, -1], "0 1 2 3 4 1 2 3 4 5 / 5 6 6 0"),
    (ComponentLabel::Reg, &[3, 3, 3, -1], "0 1 2 3 4 2 3 5 5 6 / 7 1 8 7 8 4 6 0"),
    (ComponentLabel::Reg, &[6, 3, -1], "0 1 2 3 1 2 4 4 5 / 6 7 6 7 3 5 0"),
    (ComponentLabel::Reg, &[9, -1], "0 1 2 1 2 3 3 4 / 5 6 5 6 4 0"),
    (ComponentLabel::Irr, &[12], "0 1 2 3 4 5 6 5 / 7 6 4 7 3 2 1 0"),
    (ComponentLabel::Reg, &[12], "0 1 2 1 2 3 4 3 4 5 / 5 6 7 6 7 0"),
];

/// Representative of an exceptional component, as tabulated.
pub(crate) fn exceptional_seed(label: ComponentLabel, sorted: &[i32]) -> Option<GeneralizedPermutation> {
    TABLE_ONE.iter().find(|(l, d, _)| *l == label && *d == sorted).map(|(_, _, p)| p.parse().unwrap())
}

/// Construction before the endpoint adjustment.
fn construct(s: &StratumSpec, label: ComponentLabel) -> GeneralizedPermutation {
    use ComponentLabel::*;
    let g = s.genus() as i64;
    let z = s.zeros();
    let half: Vec<i32> = z.iter().map(|d| d / 2).collect();
    match (s.holonomy(), label) {
        (Holonomy::Abelian, Hyperelliptic) => reversal(2 * g as usize + z.len() - 1),
        (Holonomy::Abelian, OddSpin) => build(odd_base(g), &erase_set(&half, 3, 1)),
        (Holonomy::Abelian, EvenSpin) => build(even_base(g), &erase_set(&half, 3, 1)),
        (Holonomy::Abelian, _) => build(abelian_base(g), &erase_set(z, 2, 1)),
        (Holonomy::Quadratic, Hyperelliptic) => hyperelliptic_quadratic(s).expect("stratum is in Lanneau's list"),
        (Holonomy::Quadratic, Irr | Reg) => {
            exceptional_seed(label, &s.sorted_degrees()).expect("stratum is exceptional")
        }
        (Holonomy::Quadratic, _) => {
            let p = s.poles() as i64;
            match g {
                0 => build(genus0_base(p), &erase_set(z, 2, 1)),
                1 => build(genus1_base(p), &erase_set(z, 2, 0)),
                2 => build(genus2_base(p), &erase_set(z, 1, 0)),
                _ => build(genus3_base(g, p), &erase_set(z, 1, 0)),
            }
        }
    }
}

fn endpoints_ok(s: &StratumSpec, p: &GeneralizedPermutation) -> bool {
    match stratum_of(p) {
        Ok(prof) => {
            s.matches(&prof)
                && (s.zeros().is_empty() || prof.left_degree == s.left_degree())
                && (s.right_degree().is_none() || prof.right_degree == s.right_degree())
        }
        Err(_) => false,
    }
}

/// Moves the cut of a cylindrical permutation until the endpoint degrees
/// are the requested ones. The component does not change.
fn adjust_endpoints(s: &StratumSpec, p: GeneralizedPermutation) -> Option<GeneralizedPermutation> {
    if endpoints_ok(s, &p) {
        return Some(p);
    }
    let cd = p.to_cylinder_diagram().ok()?;
    for diagonal in [Diagonal::TopFirst, Diagonal::BottomFirst] {
        for tb in 0..cd.top().len() {
            for bb in 0..cd.bottom().len() {
                let q = GeneralizedPermutation::from_cylinder_diagram(&cd, diagonal, tb, bb).ok()?;
                if endpoints_ok(s, &q) {
                    return Some(q);
                }
            }
        }
    }
    None
}

/// A canonical cylindrical permutation in the component `c`, with `d_1`
/// at the left endpoint (and `d_n` at the right endpoint for Abelian strata).
pub fn representative(c: &ComponentId) -> Result<GeneralizedPermutation, Error> {
    let labels = labels_of(&c.stratum);
    if labels.is_empty() {
        return Err(Error::EmptyStratum);
    }
    if !labels.contains(&c.label) {
        return Err(label_error(&c.stratum, c.label));
    }
    let p = construct(&c.stratum, c.label);
    if let Some(q) = adjust_endpoints(&c.stratum, p) {
        return Ok(q.canonical());
    }
    // Some erasure orders are not covered by a construction (the explicit
    // genus two holomorphic permutation only contracts in decreasing order);
    // build the decreasing order and move the cut instead.
    let mut sorted = c.stratum.clone();
    sorted.sort_zeros();
    let p = construct(&sorted, c.label);
    adjust_endpoints(&c.stratum, p).map(|p| p.canonical()).ok_or(Error::NotApplicable)
}

fn label_error(s: &StratumSpec, label: ComponentLabel) -> Error {
    use ComponentLabel::*;
    let never = match s.holonomy() {
        Holonomy::Abelian => matches!(label, Irr | Reg),
        Holonomy::Quadratic => matches!(label, EvenSpin | OddSpin),
    };
    if never || label == Connected {
        // Asking for "connected" in a disconnected stratum names nothing.
        if never {
            return Error::UnsupportedLabel;
        }
        return Error::NoSuchComponent;
    }
    let sorted = s.sorted_degrees();
    if matches!(label, Irr | Reg) && !EXCEPTIONAL_QUADRATIC.contains(&sorted.as_slice()) {
        return Error::NoSuchComponent;
    }
    if matches!(label, EvenSpin) && s.genus() == 3 {
        return Error::UnsupportedLabel;
    }
    Error::NoSuchComponent
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn gp(s: &str) -> GeneralizedPermutation {
        s.parse().unwrap()
    }

    fn rep(s: &str) -> Result<GeneralizedPermutation, Error> {
        let (stratum, label) = super::super::parse_component(s).unwrap();
        representative(&ComponentId { stratum, label: label.unwrap_or(ComponentLabel::Connected) })
    }

    #[test]
    fn bases_match_the_printed_examples() {
        assert_eq!(
            build(abelian_base(3), &[]).to_string(),
            "0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0"
        );
        assert_eq!(build(genus0_base(4), &[]), gp("0 2 2 / 1 1 0"));
        assert_eq!(build(genus2_base(2), &erase_set(&[6], 1, 0)), gp("0 10 9 10 6 / 6 7 7 8 8 9 0"));
        assert_eq!(build(genus2_base(2), &erase_set(&[3, 3], 1, 0)), gp("0 10 9 10 6 / 3 6 7 7 3 8 8 9 0"));
        assert_eq!(lanneau(3, 0), gp("0 1 1 2 3 4 / 4 3 2 5 5 0"));
        assert_eq!(build(odd_base(3), &erase_set(&[2], 3, 1)), gp("0 1 2 3 4 5 / 3 2 5 4 1 0"));
        assert_eq!(build(even_base(4), &erase_set(&[3], 3, 1)), gp("0 1 2 3 4 5 6 7 / 5 4 3 2 7 6 1 0"));
    }

    #[test]
    fn documented_representatives() {
        assert_eq!(rep("H(3,1)").unwrap(), gp("0 1 2 4 6 7 8 / 4 2 8 7 6 1 0"));
        assert_eq!(rep("H(2):hyp").unwrap(), gp("0 1 2 3 / 3 2 1 0"));
        assert_eq!(rep("Q(9,-1):irr").unwrap(), gp("0 1 2 3 4 1 2 3 4 5 / 5 6 6 0"));
    }

    /// The four degree patterns of the hyperelliptic family, by parity of
    /// the two parameters, with the left endpoint on the `r` part.
    #[test]
    fn lanneau_table() {
        let part = |r: usize| -> Vec<i32> {
            if r % 2 == 1 {
                vec![2 * r as i32]
            } else {
                vec![r as i32 - 1, r as i32 - 1]
            }
        };
        for r in 0..=5 {
            for s in 0..=5 {
                let p = lanneau(r, s);
                assert!(crate::rauzy::is_irreducible(&p), "{r} {s}");
                let prof = stratum_of(&p).unwrap();
                let mut want = part(r);
                want.extend(part(s));
                want.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(prof.degrees, want, "r={r} s={s}");
                assert_eq!(prof.left_degree, part(r)[0], "r={r} s={s}");
                assert_eq!(prof.holonomy, Holonomy::Quadratic);
            }
        }
    }

    /// Erasing the groups of a base permutation merges exactly the zeros of
    /// each group, whatever the grouping.
    #[test]
    fn contraction_coherence() {
        fn compositions(n: i32) -> Vec<Vec<i32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        let check = |base: Words, ds: &[i32], erase: Vec<Symbol>| {
            let p = build(base, &erase);
            let prof = stratum_of(&p).unwrap();
            let mut want = ds.to_vec();
            want.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(prof.degrees, want, "{ds:?} -> {p}");
            assert_eq!(prof.left_degree, ds[0], "{ds:?} -> {p}");
        };
        for g in 2..=5 {
            for ones in compositions(2 * g as i32 - 2) {
                check(abelian_base(g), &ones, erase_set(&ones, 2, 1));
            }
            for halves in compositions(g as i32 - 1) {
                let ds: Vec<i32> = halves.iter().map(|h| 2 * h).collect();
                check(odd_base(g), &ds, erase_set(&halves, 3, 1));
            }
        }
        for g in 4..=5 {
            for halves in compositions(g as i32 - 1) {
                if halves[0] < 3 {
                    continue;
                }
                let ds: Vec<i32> = halves.iter().map(|h| 2 * h).collect();
                check(even_base(g), &ds, erase_set(&halves, 3, 1));
            }
        }
    }

    #[test]
    fn label_errors() {
        assert_eq!(rep("Q(4)"), Err(Error::EmptyStratum));
        assert_eq!(rep("H(4):even"), Err(Error::UnsupportedLabel));
        assert_eq!(rep("H(3,1):hyp"), Err(Error::NoSuchComponent));
        assert_eq!(rep("H(4)"), Err(Error::NoSuchComponent));
        assert_eq!(rep("H(4):irr"), Err(Error::UnsupportedLabel));
        assert_eq!(rep("Q(8):irr"), Err(Error::NoSuchComponent));
    }
}
