use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use super::{canonical_words, Symbol};
use crate::Error;

/// Which of the two diagonal cuts of a cylinder is used.
///
/// `TopFirst` gives `(a0 t1 .. tr / b1 .. bs a0)`, `BottomFirst` gives
/// `(t1 .. tr a0 / a0 b1 .. bs)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagonal {
    TopFirst,
    BottomFirst,
}

/// Boundary words of a single horizontal cylinder, both read left to right.
///
/// Equality ignores labels, independent rotations of the two words, and the
/// move that swaps the lines while reversing both.
#[derive(Clone, Debug)]
pub struct CylinderDiagram {
    top: Vec<Symbol>,
    bottom: Vec<Symbol>,
}

impl CylinderDiagram {
    pub fn new(top: Vec<Symbol>, bottom: Vec<Symbol>) -> Result<Self, Error> {
        super::check_twice(&top, &bottom)?;
        Ok(CylinderDiagram { top, bottom })
    }

    pub fn top(&self) -> &[Symbol] {
        &self.top
    }

    pub fn bottom(&self) -> &[Symbol] {
        &self.bottom
    }

    /// Number of saddle connections (arcs).
    pub fn arc_count(&self) -> usize {
        (self.top.len() + self.bottom.len()) / 2
    }

    /// A symbol whose two arcs sit on the same boundary.
    pub fn has_same_line_pair(&self) -> bool {
        let dup = |w: &[Symbol]| {
            let mut v = w.to_vec();
            v.sort_unstable();
            v.windows(2).any(|p| p[0] == p[1])
        };
        dup(&self.top) || dup(&self.bottom)
    }

    /// Positive lengths exist iff both lines carry an exclusive letter or neither does.
    pub fn is_length_feasible(&self) -> bool {
        let exclusive = |a: &[Symbol], b: &[Symbol]| a.iter().any(|s| !b.contains(s));
        exclusive(&self.top, &self.bottom) == exclusive(&self.bottom, &self.top)
    }

    /// Smallest relabeled form over the equality quotient.
    pub fn canonical_key(&self) -> (Vec<Symbol>, Vec<Symbol>) {
        let mut best: Option<(Vec<Symbol>, Vec<Symbol>)> = None;
        let rev = |w: &[Symbol]| w.iter().rev().copied().collect::<Vec<_>>();
        let variants = [(self.top.clone(), self.bottom.clone()), (rev(&self.bottom), rev(&self.top))];
        for (t, b) in &variants {
            for i in 0..t.len() {
                let rt: Vec<Symbol> = t[i..].iter().chain(&t[..i]).copied().collect();
                for j in 0..b.len() {
                    let rb: Vec<Symbol> = b[j..].iter().chain(&b[..j]).copied().collect();
                    let cand = canonical_words(&rt, &rb);
                    let better = match &best {
                        None => true,
                        Some(cur) => (cand.0.len(), &cand.0, &cand.1) < (cur.0.len(), &cur.0, &cur.1),
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }
}

impl PartialEq for CylinderDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.arc_count() == other.arc_count() && self.canonical_key() == other.canonical_key()
    }
}

impl Eq for CylinderDiagram {}

impl Hash for CylinderDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_key().hash(state);
    }
}

impl fmt::Display for CylinderDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |f: &mut fmt::Formatter<'_>, w: &[Symbol]| -> fmt::Result {
            f.write_str("(")?;
            for (i, s) in w.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")
        };
        word(f, &self.top)?;
        f.write_str(" / ")?;
        word(f, &self.bottom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cd(t: &[Symbol], b: &[Symbol]) -> CylinderDiagram {
        CylinderDiagram::new(t.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn rotation_and_relabeling_invariance() {
        assert_eq!(cd(&[1, 2, 3], &[3, 2, 1]), cd(&[2, 3, 1], &[1, 3, 2]));
        assert_eq!(cd(&[1, 1], &[2, 3, 2, 3]), cd(&[7, 7], &[4, 5, 4, 5]));
        assert_ne!(cd(&[1, 1], &[2, 3, 2, 3]), cd(&[1, 1], &[2, 2, 3, 3]));
    }

    #[test]
    fn swap_and_reverse_is_quotiented() {
        let a = cd(&[1, 2, 2], &[3, 3, 1]);
        let b = cd(&[1, 3, 3], &[2, 2, 1]);
        assert_eq!(a, b);
    }

    #[test]
    fn length_feasibility() {
        assert!(cd(&[1, 1], &[2, 3, 2, 3]).is_length_feasible());
        assert!(cd(&[1, 2], &[2, 1]).is_length_feasible());
        assert!(!cd(&[1, 1, 2], &[2]).is_length_feasible());
        assert!(CylinderDiagram::new(vec![1], vec![2]).is_err());
    }
}
