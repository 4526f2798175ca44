//! Rauzy moves, irreducibility and class enumeration.
//!
//! Enumeration runs on [`Word`], a compact canonical encoding: byte 0 is the
//! length of the top line, then the top and bottom symbols, labels assigned
//! by first appearance. Words hash and compare as plain bytes.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use hashbrown::HashSet;
use smallvec::SmallVec;

use crate::genperm::{GeneralizedPermutation, Symbol};
use crate::surface;
use crate::Error;

/// Largest alphabet a [`Word`] can hold.
pub const MAX_WORD_ALPHABET: usize = 127;

/// Why a Rauzy move is not defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Undefined {
    /// Both lines end with the same symbol.
    SameRightmost,
    /// Move `a` would leave the bottom line without a usable pair.
    BottomWouldDegenerate,
    /// Move `b` would leave the top line without a usable pair.
    TopWouldDegenerate,
}

impl fmt::Display for Undefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Undefined::SameRightmost => "both lines end with the same symbol",
            Undefined::BottomWouldDegenerate => "bottom line would degenerate",
            Undefined::TopWouldDegenerate => "top line would degenerate",
        })
    }
}

type Buf<T> = SmallVec<[T; 32]>;

/// The winner is the last symbol of `x`, the loser the last symbol of `y`.
/// Returns the new `(x, y)`, or `None` when the move would degenerate `y`.
fn rauzy_move<T: Copy + Eq>(x: &[T], y: &[T]) -> Result<(Buf<T>, Buf<T>), Option<()>> {
    let (&win, &lose) = (x.last().unwrap(), y.last().unwrap());
    if win == lose {
        return Err(None);
    }
    let rest = &y[..y.len() - 1];
    if let Some(j) = rest.iter().position(|&s| s == win) {
        let mut ny: Buf<T> = SmallVec::with_capacity(y.len());
        ny.extend_from_slice(&rest[..=j]);
        ny.push(lose);
        ny.extend_from_slice(&rest[j + 1..]);
        return Ok((SmallVec::from_slice(x), ny));
    }
    // Twin of the winner sits in `x` itself.
    let i = x[..x.len() - 1].iter().position(|&s| s == win).expect("every symbol occurs twice");
    if rest.is_empty() || unique_repeat_is(y, lose) {
        return Err(Some(()));
    }
    let mut nx: Buf<T> = SmallVec::with_capacity(x.len() + 1);
    nx.extend_from_slice(&x[..i]);
    nx.push(lose);
    nx.extend_from_slice(&x[i..]);
    Ok((nx, SmallVec::from_slice(rest)))
}

/// `s` occurs twice in `w` and every other symbol of `w` occurs once.
fn unique_repeat_is<T: Copy + Eq>(w: &[T], s: T) -> bool {
    if w.iter().filter(|&&v| v == s).count() != 2 {
        return false;
    }
    w.iter().enumerate().all(|(k, &v)| v == s || !w[k + 1..].contains(&v))
}

/// Compact canonical encoding of a generalized permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(SmallVec<[u8; 32]>);

impl Word {
    fn canonical(top: &[u8], bottom: &[u8]) -> Word {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        let mut out = SmallVec::with_capacity(1 + top.len() + bottom.len());
        out.push(top.len() as u8);
        for &s in top.iter().chain(bottom) {
            let m = &mut map[s as usize];
            if *m == u8::MAX {
                *m = next;
                next += 1;
            }
            out.push(*m);
        }
        Word(out)
    }

    pub fn from_perm(p: &GeneralizedPermutation) -> Result<Word, Error> {
        if p.alphabet_size() > MAX_WORD_ALPHABET {
            return Err(Error::AlphabetTooLarge);
        }
        let c = p.canonical();
        let t: Buf<u8> = c.top().iter().map(|&s| s as u8).collect();
        let b: Buf<u8> = c.bottom().iter().map(|&s| s as u8).collect();
        Ok(Word::canonical(&t, &b))
    }

    pub fn to_perm(&self) -> GeneralizedPermutation {
        let lift = |w: &[u8]| w.iter().map(|&s| Symbol::from(s)).collect::<Vec<_>>();
        GeneralizedPermutation::new(lift(self.top()), lift(self.bottom())).expect("words are valid")
    }

    /// Raw bytes, for storage.
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn top(&self) -> &[u8] {
        &self.0[1..1 + self.0[0] as usize]
    }

    pub fn bottom(&self) -> &[u8] {
        &self.0[1 + self.0[0] as usize..]
    }

    pub fn alphabet_size(&self) -> usize {
        (self.0.len() - 1) / 2
    }

    pub fn is_true_permutation(&self) -> bool {
        // In canonical form the top line of a true permutation reads 0, 1, ...
        let t = self.top();
        t.len() == self.bottom().len() && t.iter().enumerate().all(|(i, &s)| s as usize == i)
    }

    pub fn op_a(&self) -> Result<Word, Undefined> {
        match rauzy_move(self.top(), self.bottom()) {
            Ok((t, b)) => Ok(Word::canonical(&t, &b)),
            Err(None) => Err(Undefined::SameRightmost),
            Err(Some(())) => Err(Undefined::BottomWouldDegenerate),
        }
    }

    pub fn op_b(&self) -> Result<Word, Undefined> {
        match rauzy_move(self.bottom(), self.top()) {
            Ok((b, t)) => Ok(Word::canonical(&t, &b)),
            Err(None) => Err(Undefined::SameRightmost),
            Err(Some(())) => Err(Undefined::TopWouldDegenerate),
        }
    }

    pub fn op_c(&self) -> Word {
        let t: Buf<u8> = self.bottom().iter().rev().copied().collect();
        let b: Buf<u8> = self.top().iter().rev().copied().collect();
        Word::canonical(&t, &b)
    }

    pub fn inverse(&self) -> Word {
        Word::canonical(self.bottom(), self.top())
    }

    pub fn is_irreducible(&self) -> bool {
        let (t, b) = (self.top(), self.bottom());
        if self.is_true_permutation() {
            return surface::true_permutation_irreducible(t, b);
        }
        let n = self.alphabet_size();
        surface::lengths_feasible(t, b, n) && surface::heights_feasible(t, b, n)
    }

    /// Appends the text form `top / bottom` to `out`.
    pub fn write_text(&self, out: &mut String) {
        let line = |out: &mut String, w: &[u8]| {
            for (i, s) in w.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{s}");
            }
        };
        line(out, self.top());
        out.push_str(" / ");
        line(out, self.bottom());
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s);
        s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

fn lift(
    p: &GeneralizedPermutation,
    f: impl Fn(&[Symbol], &[Symbol]) -> Result<(Buf<Symbol>, Buf<Symbol>), Option<()>>,
    degenerate: Undefined,
) -> Result<GeneralizedPermutation, Undefined> {
    match f(p.top(), p.bottom()) {
        Ok((t, b)) => Ok(GeneralizedPermutation::canonical_from(&t, &b).expect("moves keep the pairing")),
        Err(None) => Err(Undefined::SameRightmost),
        Err(Some(())) => Err(degenerate),
    }
}

/// Rauzy move `a`: the top line wins.
pub fn op_a(p: &GeneralizedPermutation) -> Result<GeneralizedPermutation, Undefined> {
    lift(p, |t, b| rauzy_move(t, b), Undefined::BottomWouldDegenerate)
}

/// Rauzy move `b`: the bottom line wins.
pub fn op_b(p: &GeneralizedPermutation) -> Result<GeneralizedPermutation, Undefined> {
    lift(p, |t, b| rauzy_move(b, t).map(|(b, t)| (t, b)), Undefined::TopWouldDegenerate)
}

/// Reverses both lines and swaps them.
pub fn op_c(p: &GeneralizedPermutation) -> GeneralizedPermutation {
    let t: Vec<Symbol> = p.bottom().iter().rev().copied().collect();
    let b: Vec<Symbol> = p.top().iter().rev().copied().collect();
    GeneralizedPermutation::canonical_from(&t, &b).expect("reversal keeps the pairing")
}

pub fn is_irreducible(p: &GeneralizedPermutation) -> bool {
    let c = p.canonical();
    let (t, b) = (c.top(), c.bottom());
    if c.is_true_permutation() {
        return surface::true_permutation_irreducible(t, b);
    }
    let n = c.alphabet_size();
    surface::lengths_feasible(t, b, n) && surface::heights_feasible(t, b, n)
}

/// Rauzy class (moves `a`, `b`) or extended class (also `c` when the image
/// is irreducible).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Rauzy,
    Extended,
}

impl ClassKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Rauzy => "rauzy",
            ClassKind::Extended => "extended",
        }
    }
}

/// Calls `f(word, needs_check)` for each image of `w`. Images flagged with
/// `needs_check` must pass [`Word::is_irreducible`] before joining the class.
pub fn for_each_successor(w: &Word, kind: ClassKind, mut f: impl FnMut(Word, bool)) {
    if let Ok(v) = w.op_a() {
        f(v, false);
    }
    if let Ok(v) = w.op_b() {
        f(v, false);
    }
    if kind == ClassKind::Extended {
        f(w.op_c(), true);
    }
}

/// A materialized class.
#[derive(Clone, Debug)]
pub struct ClassHandle {
    pub kind: ClassKind,
    pub seed: GeneralizedPermutation,
    pub cardinality: usize,
    /// Members sorted by their text form; `None` when stored elsewhere.
    pub members: Option<Vec<Word>>,
}

impl ClassHandle {
    /// Builds a handle from an enumerated member set, sorting the members.
    pub fn from_members(kind: ClassKind, seed: GeneralizedPermutation, members: Vec<Word>) -> Self {
        let members = sort_members(members);
        ClassHandle { kind, seed: seed.canonical(), cardinality: members.len(), members: Some(members) }
    }
}

/// Sorts words by their text form.
pub fn sort_members(members: Vec<Word>) -> Vec<Word> {
    let mut keyed: Vec<(String, Word)> = members.into_iter().map(|w| (w.text(), w)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, w)| w).collect()
}

fn seed_word(seed: &GeneralizedPermutation) -> Result<Word, Error> {
    let w = Word::from_perm(seed)?;
    if !w.is_irreducible() {
        return Err(Error::Reducible);
    }
    Ok(w)
}

/// Breadth-first search from `seed`; stops early once `stop` returns true.
fn search(seed: Word, kind: ClassKind, mut stop: impl FnMut(&Word) -> bool) -> (HashSet<Word>, bool) {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    if stop(&seed) {
        seen.insert(seed);
        return (seen, true);
    }
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some(w) = queue.pop_front() {
        let mut found = false;
        for_each_successor(&w, kind, |v, check| {
            if found || seen.contains(&v) || (check && !v.is_irreducible()) {
                return;
            }
            found = stop(&v);
            seen.insert(v.clone());
            queue.push_back(v);
        });
        if found {
            return (seen, true);
        }
    }
    (seen, false)
}

/// All members of the class of an irreducible word, unsorted.
pub fn enumerate(seed: &Word, kind: ClassKind) -> HashSet<Word> {
    search(seed.clone(), kind, |_| false).0
}

fn class(seed: &GeneralizedPermutation, kind: ClassKind) -> Result<ClassHandle, Error> {
    let w = seed_word(seed)?;
    let members = enumerate(&w, kind).into_iter().collect();
    Ok(ClassHandle::from_members(kind, seed.clone(), members))
}

pub fn rauzy_class(seed: &GeneralizedPermutation) -> Result<ClassHandle, Error> {
    class(seed, ClassKind::Rauzy)
}

pub fn extended_rauzy_class(seed: &GeneralizedPermutation) -> Result<ClassHandle, Error> {
    class(seed, ClassKind::Extended)
}

/// Whether `target` lies in the class of `seed`, without building the whole class
/// unless it has to.
pub fn contains(seed: &GeneralizedPermutation, target: &GeneralizedPermutation, kind: ClassKind) -> Result<bool, Error> {
    let w = seed_word(seed)?;
    if target.alphabet_size() != seed.alphabet_size() {
        return Ok(false);
    }
    let t = Word::from_perm(target)?;
    Ok(search(w, kind, |v| *v == t).1)
}

/// The extended class taken literally: close under `a`, `b`, `c` through
/// every generalized permutation, then keep the irreducible ones. Only
/// practical for small alphabets; used to compare against [`ClassKind::Extended`].
pub fn extended_class_through_reducibles(seed: &Word) -> HashSet<Word> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(w) = queue.pop_front() {
        for v in [w.op_a().ok(), w.op_b().ok(), Some(w.op_c())].into_iter().flatten() {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.retain(|w| w.is_irreducible());
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(s: &str) -> GeneralizedPermutation {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        Word::from_perm(&gp(s)).unwrap()
    }

    #[test]
    fn moves_on_the_reversal() {
        let p = gp("0 1 2 3 / 3 2 1 0");
        assert_eq!(op_a(&p).unwrap(), gp("0 1 2 3 / 3 0 2 1"));
        assert_eq!(op_b(&p).unwrap(), gp("0 3 1 2 / 3 2 1 0"));
        assert_eq!(op_c(&p), p);
        assert_eq!(w("0 1 2 3 / 3 2 1 0").op_a().unwrap(), w("0 1 2 3 / 3 0 2 1"));
        assert_eq!(w("0 1 2 3 / 3 2 1 0").op_b().unwrap(), w("0 3 1 2 / 3 2 1 0"));
    }

    #[test]
    fn moves_on_generalized_permutations() {
        assert_eq!(op_a(&gp("0 1 1 / 2 2 0")).unwrap(), gp("0 0 1 1 / 2 2"));
        assert_eq!(w("0 1 1 / 2 2 0").op_a().unwrap(), w("0 0 1 1 / 2 2"));
        assert_eq!(op_a(&gp("0 1 1 0 / 2 2")), Err(Undefined::BottomWouldDegenerate));
        assert_eq!(w("0 1 1 0 / 2 2").op_a(), Err(Undefined::BottomWouldDegenerate));
        assert_eq!(op_b(&gp("2 2 / 0 1 1 0")), Err(Undefined::TopWouldDegenerate));
        assert_eq!(op_c(&gp("0 1 1 / 2 2 0")), gp("0 1 1 / 2 2 0"));
        assert_eq!(op_a(&gp("0 1 / 0 2 2 1")), Err(Undefined::SameRightmost));
        assert_eq!(op_b(&gp("0 1 / 0 2 2 1")), Err(Undefined::SameRightmost));
    }

    #[test]
    fn word_round_trip() {
        let p = gp("a b b / c c a");
        let word = Word::from_perm(&p).unwrap();
        assert_eq!(word.to_perm(), p);
        assert_eq!(word.text(), "0 1 1 / 2 2 0");
        assert_eq!(word.alphabet_size(), 3);
        assert!(!word.is_true_permutation());
        assert!(w("0 1 / 1 0").is_true_permutation());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&gp("0 1 2 3 / 3 2 1 0")));
        assert!(!is_irreducible(&gp("0 1 2 3 / 1 0 3 2")));
        assert!(is_irreducible(&gp("0 1 1 / 2 2 0")));
        assert!(!w("0 1 2 3 / 1 0 3 2").is_irreducible());
        assert!(w("0 1 2 2 / 1 3 3 0").is_irreducible());
    }

    #[test]
    fn small_class_sizes() {
        assert_eq!(rauzy_class(&gp("0 1 2 3 / 3 2 1 0")).unwrap().cardinality, 7);
        assert_eq!(rauzy_class(&gp("0 1 2 3 4 / 4 3 2 1 0")).unwrap().cardinality, 15);
        assert_eq!(rauzy_class(&gp("0 1 2 2 / 1 3 3 0")).unwrap().cardinality, 43);
        assert_eq!(rauzy_class(&gp("0 1 2 3 / 1 0 3 2")).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn handle_is_sorted_and_contains_seed() {
        let h = rauzy_class(&gp("0 1 2 3 / 3 2 1 0")).unwrap();
        let m = h.members.unwrap();
        let texts: Vec<String> = m.iter().map(|w| w.text()).collect();
        assert!(texts.windows(2).all(|p| p[0] < p[1]));
        assert!(texts.iter().any(|t| t == "0 1 2 3 / 3 2 1 0"));
    }

    #[test]
    fn membership() {
        let seed = gp("0 1 2 3 / 3 2 1 0");
        let a = op_a(&seed).unwrap();
        assert!(contains(&seed, &a, ClassKind::Rauzy).unwrap());
        assert!(!contains(&seed, &gp("0 1 2 3 4 / 4 3 2 1 0"), ClassKind::Rauzy).unwrap());
        let odd = gp("0 1 2 3 4 5 / 3 2 5 4 1 0");
        let hyp = gp("0 1 2 3 4 5 / 5 4 3 2 1 0");
        assert!(!contains(&odd, &hyp, ClassKind::Extended).unwrap());
    }

    #[test]
    fn h4_classes() {
        let hyp = w("0 1 2 3 4 5 / 5 4 3 2 1 0");
        let odd = w("0 1 2 3 4 5 / 3 2 5 4 1 0");
        assert_eq!(enumerate(&hyp, ClassKind::Rauzy).len(), 31);
        assert_eq!(enumerate(&odd, ClassKind::Rauzy).len(), 134);
        assert_eq!(enumerate(&odd, ClassKind::Extended).len(), 134);
    }
}
