//! Generalized permutations: two words in which every symbol occurs twice.
//!
//! Labels are kept as given until [`GeneralizedPermutation::canonical`] is
//! called, so constructions that refer to symbols by their original names
//! (erasure sets, adjacency tables) stay readable. Equality and hashing look
//! at canonical forms only.

mod diagram;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

pub use diagram::{CylinderDiagram, Diagonal};

use crate::Error;

/// Alphabet index of a symbol.
pub type Symbol = u16;

/// Which line of a generalized permutation a position lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Line {
    Top,
    Bottom,
}

#[derive(Clone, Debug)]
pub struct GeneralizedPermutation {
    top: Vec<Symbol>,
    bottom: Vec<Symbol>,
}

/// Relabels symbols `0, 1, 2, ...` by first appearance, top line first.
pub(crate) fn canonical_words(top: &[Symbol], bottom: &[Symbol]) -> (Vec<Symbol>, Vec<Symbol>) {
    let mut map: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    let mut relabel = |s: Symbol| {
        let next = map.len() as Symbol;
        *map.entry(s).or_insert(next)
    };
    let t: Vec<Symbol> = top.iter().map(|&s| relabel(s)).collect();
    let b: Vec<Symbol> = bottom.iter().map(|&s| relabel(s)).collect();
    (t, b)
}

fn check_twice(top: &[Symbol], bottom: &[Symbol]) -> Result<(), Error> {
    if top.is_empty() || bottom.is_empty() {
        return Err(Error::MalformedInput("empty line".into()));
    }
    let mut all: Vec<Symbol> = top.iter().chain(bottom).copied().collect();
    all.sort_unstable();
    for pair in all.chunks(2) {
        if pair.len() != 2 || pair[0] != pair[1] {
            return Err(Error::MalformedInput(alloc::format!(
                "symbol {} does not occur exactly twice",
                pair[0]
            )));
        }
    }
    if all.windows(3).any(|w| w[0] == w[2]) {
        return Err(Error::MalformedInput("a symbol occurs more than twice".into()));
    }
    Ok(())
}

impl GeneralizedPermutation {
    /// Builds a permutation keeping the given labels.
    pub fn new(top: Vec<Symbol>, bottom: Vec<Symbol>) -> Result<Self, Error> {
        check_twice(&top, &bottom)?;
        Ok(GeneralizedPermutation { top, bottom })
    }

    /// Builds a permutation and canonicalizes it.
    pub fn canonical_from(top: &[Symbol], bottom: &[Symbol]) -> Result<Self, Error> {
        check_twice(top, bottom)?;
        let (top, bottom) = canonical_words(top, bottom);
        Ok(GeneralizedPermutation { top, bottom })
    }

    /// Parses `"a b c / d e f"` or the same two lines separated by a newline.
    pub fn parse(text: &str) -> Result<Self, Error> {
        Self::parse_named(text).map(|(p, _)| p)
    }

    /// Like [`parse`](Self::parse), also returning the input name of each
    /// symbol of the result (`names[s]` for symbol `s`).
    pub fn parse_named(text: &str) -> Result<(Self, Vec<String>), Error> {
        let text = text.trim();
        let lines: Vec<&str> = if text.contains('/') {
            text.split('/').collect()
        } else {
            text.lines().filter(|l| !l.trim().is_empty()).collect()
        };
        if lines.len() != 2 {
            return Err(Error::MalformedInput(alloc::format!(
                "expected two lines, found {}",
                lines.len()
            )));
        }
        let mut names: BTreeMap<String, Symbol> = BTreeMap::new();
        let mut words: [Vec<Symbol>; 2] = [Vec::new(), Vec::new()];
        for (line, word) in lines.iter().zip(words.iter_mut()) {
            for token in line.split_whitespace() {
                if !token.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::MalformedInput(alloc::format!("bad token {token:?}")));
                }
                // "007" and "7" name the same symbol.
                let key = match token.parse::<u64>() {
                    Ok(v) => v.to_string(),
                    Err(_) => token.to_string(),
                };
                let next = names.len();
                if next > Symbol::MAX as usize {
                    return Err(Error::AlphabetTooLarge);
                }
                let id = *names.entry(key).or_insert(next as Symbol);
                word.push(id);
            }
            if word.is_empty() {
                return Err(Error::MalformedInput("empty line".into()));
            }
        }
        let [top, bottom] = words;
        // Ids were handed out by first appearance, so canonicalizing keeps them.
        let p = Self::canonical_from(&top, &bottom)?;
        let mut by_id = vec![String::new(); names.len()];
        for (name, id) in names {
            by_id[id as usize] = name;
        }
        Ok((p, by_id))
    }

    pub fn top(&self) -> &[Symbol] {
        &self.top
    }

    pub fn bottom(&self) -> &[Symbol] {
        &self.bottom
    }

    pub fn line(&self, line: Line) -> &[Symbol] {
        match line {
            Line::Top => &self.top,
            Line::Bottom => &self.bottom,
        }
    }

    /// Number of distinct symbols.
    pub fn alphabet_size(&self) -> usize {
        (self.top.len() + self.bottom.len()) / 2
    }

    /// Distinct symbols in increasing order.
    pub fn alphabet(&self) -> Vec<Symbol> {
        let mut all: Vec<Symbol> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// The two positions of `s`, top positions first.
    pub fn occurrences(&self, s: Symbol) -> Option<[(Line, usize); 2]> {
        let mut found = [(Line::Top, 0); 2];
        let mut k = 0;
        for (line, word) in [(Line::Top, &self.top), (Line::Bottom, &self.bottom)] {
            for (i, &x) in word.iter().enumerate() {
                if x == s {
                    if k == 2 {
                        return None;
                    }
                    found[k] = (line, i);
                    k += 1;
                }
            }
        }
        (k == 2).then_some(found)
    }

    pub fn canonical(&self) -> Self {
        let (top, bottom) = canonical_words(&self.top, &self.bottom);
        GeneralizedPermutation { top, bottom }
    }

    pub fn is_canonical(&self) -> bool {
        let (t, b) = canonical_words(&self.top, &self.bottom);
        t == self.top && b == self.bottom
    }

    /// Every symbol occurs once in each line.
    pub fn is_true_permutation(&self) -> bool {
        if self.top.len() != self.bottom.len() {
            return false;
        }
        let mut t = self.top.clone();
        t.sort_unstable();
        t.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_balanced(&self) -> bool {
        self.top.len() == self.bottom.len()
    }

    /// Lines swapped, then canonicalized.
    pub fn inverse(&self) -> Self {
        let (top, bottom) = canonical_words(&self.bottom, &self.top);
        GeneralizedPermutation { top, bottom }
    }

    /// Removes both occurrences of each victim and canonicalizes.
    pub fn erase_symbols(&self, victims: &[Symbol]) -> Result<Self, Error> {
        for &v in victims {
            if !self.top.contains(&v) && !self.bottom.contains(&v) {
                return Err(Error::UnknownSymbol(v));
            }
        }
        let keep = |w: &[Symbol]| -> Vec<Symbol> {
            w.iter().copied().filter(|s| !victims.contains(s)).collect()
        };
        let (t, b) = (keep(&self.top), keep(&self.bottom));
        if t.is_empty() || b.is_empty() {
            return Err(Error::EmptyLine);
        }
        let (top, bottom) = canonical_words(&t, &b);
        Ok(GeneralizedPermutation { top, bottom })
    }

    fn symbol_sets_ok(&self) -> bool {
        let set = |w: &[Symbol]| {
            let mut v = w.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        let (t, b) = (set(&self.top), set(&self.bottom));
        let proper_subset = |a: &[Symbol], b: &[Symbol]| a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok());
        !proper_subset(&t, &b) && !proper_subset(&b, &t)
    }

    /// The cut symbol and the diagonal form, when the permutation is cylindrical.
    pub(crate) fn cylinder_cut(&self) -> Option<Diagonal> {
        if self.top.len() < 2 || self.bottom.len() < 2 || !self.symbol_sets_ok() {
            return None;
        }
        if self.top[0] == self.bottom[self.bottom.len() - 1] {
            Some(Diagonal::TopFirst)
        } else if self.bottom[0] == self.top[self.top.len() - 1] {
            Some(Diagonal::BottomFirst)
        } else {
            None
        }
    }

    /// The first symbol of one line is the last of the other, and neither
    /// line's symbol set is a proper subset of the other's.
    pub fn is_cylindrical(&self) -> bool {
        self.cylinder_cut().is_some()
    }

    /// Strips the cut symbol and returns the two cyclic boundary words.
    pub fn to_cylinder_diagram(&self) -> Result<CylinderDiagram, Error> {
        let (t, b) = match self.cylinder_cut().ok_or(Error::NotCylindrical)? {
            Diagonal::TopFirst => (&self.top[1..], &self.bottom[..self.bottom.len() - 1]),
            Diagonal::BottomFirst => (&self.top[..self.top.len() - 1], &self.bottom[1..]),
        };
        CylinderDiagram::new(t.to_vec(), b.to_vec())
    }

    /// Cuts the cylinder of `cd` along a diagonal starting at the given arcs.
    pub fn from_cylinder_diagram(
        cd: &CylinderDiagram,
        diagonal: Diagonal,
        top_base: usize,
        bottom_base: usize,
    ) -> Result<Self, Error> {
        let (t, b) = (cd.top(), cd.bottom());
        if top_base >= t.len() || bottom_base >= b.len() {
            return Err(Error::IndexOutOfRange);
        }
        let cut = t.iter().chain(b).copied().max().unwrap_or(0) + 1;
        let rt = t[top_base..].iter().chain(&t[..top_base]).copied();
        let rb = b[bottom_base..].iter().chain(&b[..bottom_base]).copied();
        let (top, bottom): (Vec<Symbol>, Vec<Symbol>) = match diagonal {
            Diagonal::TopFirst => (core::iter::once(cut).chain(rt).collect(), rb.chain(core::iter::once(cut)).collect()),
            Diagonal::BottomFirst => (rt.chain(core::iter::once(cut)).collect(), core::iter::once(cut).chain(rb).collect()),
        };
        let (top, bottom) = canonical_words(&top, &bottom);
        Ok(GeneralizedPermutation { top, bottom })
    }
}

impl PartialEq for GeneralizedPermutation {
    fn eq(&self, other: &Self) -> bool {
        self.top.len() == other.top.len()
            && self.bottom.len() == other.bottom.len()
            && canonical_words(&self.top, &self.bottom) == canonical_words(&other.top, &other.bottom)
    }
}

impl Eq for GeneralizedPermutation {}

impl Hash for GeneralizedPermutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        canonical_words(&self.top, &self.bottom).hash(state);
    }
}

impl PartialOrd for GeneralizedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by the serialized canonical form, the order used in class files.
impl Ord for GeneralizedPermutation {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.canonical().to_string().cmp(&other.canonical().to_string())
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[Symbol]) -> fmt::Result {
    for (i, s) in w.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

/// `top / bottom`, single spaces. Labels are printed as stored.
impl fmt::Display for GeneralizedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.top)?;
        f.write_str(" / ")?;
        write_word(f, &self.bottom)
    }
}

impl core::str::FromStr for GeneralizedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::parse(s)
    }
}
