//! Golden data: tabulated Rauzy classes of small strata, the exceptional
//! extended classes, and the adjacency chains. Permutations are quoted as
//! printed; true permutations are given by their second line only.

use gprc_core::components::{parse_component, ComponentId, ComponentLabel};
use gprc_core::{GeneralizedPermutation, Symbol};

/// One tabulated Rauzy class.
#[derive(Clone, Copy, Debug)]
pub struct Row {
    /// Second line `(π⁻¹(1), …, π⁻¹(n))` for true permutations, or both
    /// lines `"top / bottom"` with 1-based symbols.
    pub seed: &'static str,
    pub count: usize,
    /// The component, zeros listed as printed (first entry at the left endpoint).
    pub component: &'static str,
    /// Degree at the left endpoint; `-1` for a pole.
    pub left: i32,
}

/// Rows separated by horizontal lines form one extended class.
pub type Block = &'static [Row];

const fn row(seed: &'static str, count: usize, component: &'static str, left: i32) -> Row {
    Row { seed, count, component, left }
}

pub const ABELIAN: &[Block] = &[
    // genus 2
    &[row("4 3 2 1", 7, "H(2):hyp", 2)],
    &[row("5 4 3 2 1", 15, "H(1,1):hyp", 1)],
    // genus 3
    &[row("6 5 4 3 2 1", 31, "H(4):hyp", 4)],
    &[row("4 3 6 5 2 1", 134, "H(4):odd", 4)],
    &[row("4 3 7 6 5 2 1", 509, "H(3,1)", 3), row("5 4 3 7 6 2 1", 261, "H(1,3)", 1)],
    &[row("7 6 5 4 3 2 1", 63, "H(2,2):hyp", 2)],
    &[row("4 3 5 7 6 2 1", 294, "H(2,2):odd", 2)],
    &[row("5 4 3 8 7 6 2 1", 1258, "H(1,2,1)", 1), row("4 3 5 8 7 6 2 1", 919, "H(2,1,1)", 2)],
    &[row("5 4 3 6 9 8 7 2 1", 1255, "H(1,1,1,1)", 1)],
    // genus 4 (partial, as printed)
    &[row("8 7 6 5 4 3 2 1", 127, "H(6):hyp", 6)],
    &[row("6 5 4 3 8 7 2 1", 2327, "H(6):even", 6)],
    &[row("4 3 6 5 8 7 2 1", 5209, "H(6):odd", 6)],
    &[row("5 4 3 7 6 9 8 2 1", 10543, "H(1,5)", 1), row("4 3 6 5 9 8 7 2 1", 31031, "H(5,1)", 5)],
    &[row("7 6 5 4 3 9 8 2 1", 3954, "H(2,4):even", 2), row("6 5 4 3 7 9 8 2 1", 6614, "H(4,2):even", 4)],
    &[row("4 3 5 7 6 9 8 2 1", 8797, "H(2,4):odd", 2), row("4 3 6 5 7 9 8 2 1", 14709, "H(4,2):odd", 4)],
    &[row("9 8 7 6 5 4 3 2 1", 255, "H(3,3):hyp", 3)],
    &[row("4 3 7 6 5 9 8 2 1", 15568, "H(3,3):nonhyp", 3)],
];

pub const QUADRATIC: &[Block] = &[
    // genus 0
    &[row("1 2 2 / 3 3 1", 4, "Q(-1^4)", -1)],
    &[row("1 2 2 / 3 3 4 4 5 5 1", 10, "Q(1,-1^5)", 1), row("1 2 3 3 4 4 2 / 5 5 1", 22, "Q(1,-1^5)", -1)],
    &[row("1 2 2 / 3 3 4 4 5 5 6 6 1", 13, "Q(2,-1^6)", 2), row("1 2 3 3 4 4 5 5 2 / 6 6 1", 28, "Q(2,-1^6)", -1)],
    // genus 1
    &[row("1 2 3 3 / 2 4 4 1", 43, "Q(2,-1^2)", 2), row("1 2 3 3 / 4 2 4 1", 20, "Q(2,-1^2)", -1)],
    &[row("1 2 3 3 4 4 / 2 5 5 1", 198, "Q(3,-1^3)", 3), row("1 2 3 3 4 4 / 5 2 5 1", 120, "Q(3,-1^3)", -1)],
    &[row("1 2 3 3 4 4 5 5 / 2 6 6 1", 596, "Q(4,-1^4)", 4), row("1 2 3 3 4 4 5 5 / 6 2 6 1", 440, "Q(4,-1^4)", -1)],
    &[row("1 2 3 4 4 / 3 2 5 5 1", 128, "Q(1,1,-1^2)", 1), row("1 2 3 4 4 / 5 3 2 5 1", 34, "Q(1,1,-1^2)", -1)],
    &[
        row("1 2 3 3 4 5 5 / 4 2 6 6 1", 714, "Q(2,1,-1^3)", 2),
        row("1 2 3 4 4 5 5 / 3 2 6 6 1", 514, "Q(1,2,-1^3)", 1),
        row("1 2 3 3 4 5 5 / 6 4 2 6 1", 510, "Q(2,1,-1^3)", -1),
    ],
    // genus 2
    &[row("1 2 3 2 4 / 4 5 5 3 1", 440, "Q(5,-1)", 5), row("1 2 3 2 4 / 5 3 4 5 1", 54, "Q(5,-1)", -1)],
    &[
        row("1 2 3 2 4 / 4 5 5 6 6 3 1", 4832, "Q(6,-1^2):nonhyp", 6),
        row("1 2 3 2 4 / 5 3 4 6 6 5 1", 1118, "Q(6,-1^2):nonhyp", -1),
    ],
    &[
        row("1 2 2 3 4 5 / 5 4 3 6 6 1", 347, "Q(6,-1^2):hyp", 6),
        row("1 2 3 4 5 2 / 6 5 4 3 6 1", 60, "Q(6,-1^2):hyp", -1),
    ],
    &[row("1 2 3 2 4 / 5 4 5 3 1", 73, "Q(2,2)", 2)],
    &[
        row("1 2 3 2 4 / 5 4 5 6 6 3 1", 1666, "Q(3,2,-1)", 3),
        row("1 2 3 2 4 / 5 4 6 6 5 3 1", 1348, "Q(2,3,-1)", 2),
        row("1 2 3 2 4 / 5 3 6 4 6 5 1", 294, "Q(3,2,-1)", -1),
    ],
    &[
        row("1 2 3 2 4 5 / 5 4 6 6 3 1", 2062, "Q(4,1,-1)", 4),
        row("1 2 3 4 2 5 / 3 5 6 6 4 1", 1076, "Q(1,4,-1)", 1),
        row("1 2 3 2 4 5 / 6 3 5 4 6 1", 260, "Q(4,1,-1)", -1),
    ],
    &[row("1 2 3 2 4 5 / 6 5 4 6 3 1", 125, "Q(2,1,1)", 2), row("1 2 3 4 2 5 / 3 6 5 6 4 1", 220, "Q(1,1,2)", 1)],
    // genus 3
    &[row("1 2 3 2 3 4 / 5 6 5 6 4 1", 2590, "Q(8)", 8)],
];

/// Seeds of the extended classes of the exceptional strata and their sizes.
pub const EXCEPTIONAL: [(&str, usize, &str); 8] = [
    ("Q(3,3,3,-1):irr", 88_374, "0 1 2 3 4 5 1 6 2 3 4 5 6 7 / 7 8 8 0"),
    ("Q(6,3,-1):irr", 72_172, "0 1 2 3 4 5 1 2 3 4 5 6 / 6 7 7 0"),
    ("Q(9,-1):irr", 12_366, "0 1 2 3 4 1 2 3 4 5 / 5 6 6 0"),
    ("Q(3,3,3,-1):reg", 612_838, "0 1 2 3 4 2 3 5 5 6 / 7 1 8 7 8 4 6 0"),
    ("Q(6,3,-1):reg", 531_674, "0 1 2 3 1 2 4 4 5 / 6 7 6 7 3 5 0"),
    ("Q(9,-1):reg", 95_944, "0 1 2 1 2 3 3 4 / 5 6 5 6 4 0"),
    ("Q(12):irr", 146_049, "0 1 2 3 4 5 6 5 / 7 6 4 7 3 2 1 0"),
    ("Q(12):reg", 881_599, "0 1 2 1 2 3 4 3 4 5 / 5 6 7 6 7 0"),
];

/// Regular components reached from the principal stratum by contracting
/// saddle connections; symbols keep their original names.
pub const REGULAR_CHAIN: [(&str, &[Symbol], &[Symbol]); 4] = [
    (
        "Q(1,1,1,1,1,1,1,1,1,-1)",
        &[0, 1, 2, 3, 4, 12, 7, 13, 6, 12, 5, 13, 8, 14, 14, 9],
        &[10, 3, 11, 2, 10, 1, 11, 4, 5, 6, 7, 8, 9, 0],
    ),
    ("Q(3,3,3,-1):reg", &[0, 3, 12, 13, 6, 12, 13, 14, 14, 9], &[10, 3, 11, 10, 11, 6, 9, 0]),
    ("Q(6,3,-1):reg", &[0, 12, 13, 6, 12, 13, 14, 14, 9], &[10, 11, 10, 11, 6, 9, 0]),
    ("Q(9,-1):reg", &[0, 12, 13, 12, 13, 14, 14, 9], &[10, 11, 10, 11, 9, 0]),
];

/// The same permutations after merging the pole: erase symbol 14.
pub const MERGED_CHAIN: [(&str, &[Symbol], &[Symbol]); 3] = [
    ("Q(3,3,2)", &[0, 3, 12, 13, 6, 12, 13, 9], &[10, 3, 11, 10, 11, 6, 9, 0]),
    ("Q(6,2)", &[0, 12, 13, 6, 12, 13, 9], &[10, 11, 10, 11, 6, 9, 0]),
    ("Q(8)", &[0, 12, 13, 12, 13, 9], &[10, 11, 10, 11, 9, 0]),
];

/// Irregular chain: erase this symbol of the exceptional seed to reach the next.
pub const IRREGULAR_CHAIN: [(&str, Symbol, &str); 2] =
    [("Q(3,3,3,-1):irr", 6, "Q(6,3,-1):irr"), ("Q(6,3,-1):irr", 5, "Q(9,-1):irr")];

impl Row {
    /// The seed as a canonical generalized permutation.
    pub fn permutation(&self) -> GeneralizedPermutation {
        if self.seed.contains('/') {
            return self.seed.parse().expect("golden seed");
        }
        let bottom: Vec<Symbol> = self.seed.split_whitespace().map(|t| t.parse::<Symbol>().expect("golden seed") - 1).collect();
        let top: Vec<Symbol> = (0..bottom.len() as Symbol).collect();
        GeneralizedPermutation::canonical_from(&top, &bottom).expect("golden seed")
    }

    pub fn component(&self) -> ComponentId {
        component(self.component)
    }
}

/// Parses a component name from the tables.
pub fn component(text: &str) -> ComponentId {
    let (stratum, label) = parse_component(text).expect("golden component");
    ComponentId { stratum, label: label.unwrap_or(ComponentLabel::Connected) }
}

/// Seed of an exceptional component.
pub fn exceptional(name: &str) -> GeneralizedPermutation {
    EXCEPTIONAL.iter().find(|e| e.0 == name).expect("tabulated component").2.parse().expect("golden seed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        for block in ABELIAN.iter().chain(QUADRATIC) {
            for r in *block {
                let p = r.permutation();
                assert_eq!(p.is_true_permutation(), !r.seed.contains('/'), "{}", r.seed);
                r.component();
            }
        }
        assert_eq!(ABELIAN[0][0].permutation().to_string(), "0 1 2 3 / 3 2 1 0");
        assert_eq!(QUADRATIC[0][0].permutation().to_string(), "0 1 1 / 2 2 0");
        for (name, _, _) in EXCEPTIONAL {
            exceptional(name);
        }
        let rows: usize = ABELIAN.iter().chain(QUADRATIC).map(|b| b.len()).sum();
        assert_eq!(rows, 22 + 32);
    }
}
