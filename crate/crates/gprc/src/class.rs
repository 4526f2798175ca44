//! Materializing classes: parallel search, deterministic ordering, and the
//! on-disk store for large classes.

use std::io;
use std::path::PathBuf;

use gprc_core::rauzy::{sort_members, ClassHandle, ClassKind, Word};
use gprc_core::{Error, GeneralizedPermutation};

use crate::bfs::{par_enumerate, with_jobs};
use crate::store::ClassStore;

/// Classes larger than this are dropped from memory once written to a store.
pub const DEFAULT_SPILL_THRESHOLD: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct Options {
    /// Worker threads; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
    /// Where classes are cached and spilled.
    pub store: Option<ClassStore>,
    /// Reuse stored classes and write new ones.
    pub persist: bool,
    pub spill_threshold: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { jobs: None, store: None, persist: true, spill_threshold: DEFAULT_SPILL_THRESHOLD }
    }
}

#[derive(Debug)]
pub enum ClassError {
    Math(Error),
    Io(io::Error),
}

impl std::fmt::Display for ClassError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassError::Math(e) => e.fmt(f),
            ClassError::Io(e) => write!(f, "class store: {e}"),
        }
    }
}

impl std::error::Error for ClassError {}

impl From<Error> for ClassError {
    fn from(e: Error) -> Self {
        ClassError::Math(e)
    }
}

impl From<io::Error> for ClassError {
    fn from(e: io::Error) -> Self {
        ClassError::Io(e)
    }
}

/// A materialized class and where it lives on disk, if anywhere.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub handle: ClassHandle,
    pub file: Option<PathBuf>,
    /// Whether the members came from the store.
    pub cached: bool,
}

/// Sorted members of the class of an irreducible seed.
pub fn sorted_class(seed: &Word, kind: ClassKind, jobs: Option<usize>) -> Vec<Word> {
    with_jobs(jobs, || sort_members(par_enumerate(seed, kind).into_iter().collect()))
}

/// Enumerates (or loads) the class of `seed`.
///
/// With a store and `persist`, the class file is written after enumeration.
/// Classes above the spill threshold keep only their cardinality in memory
/// when a file holds the members.
pub fn materialize(seed: &GeneralizedPermutation, kind: ClassKind, opts: &Options) -> Result<Materialized, ClassError> {
    let w = Word::from_perm(seed)?;
    if !w.is_irreducible() {
        return Err(Error::Reducible.into());
    }
    let seed = seed.canonical();
    let store = opts.store.as_ref().filter(|_| opts.persist);
    let (members, cached) = match store.map(|s| s.load(kind, &seed)).transpose()?.flatten() {
        Some(m) => (m, true),
        None => (sorted_class(&w, kind, opts.jobs), false),
    };
    let file = match store {
        Some(s) if !cached => Some(s.save(kind, &seed, &members)?),
        Some(s) => Some(s.path(kind, &seed)),
        None => None,
    };
    let cardinality = members.len();
    let members = if file.is_some() && cardinality > opts.spill_threshold { None } else { Some(members) };
    Ok(Materialized { handle: ClassHandle { kind, seed, cardinality, members }, file, cached })
}

/// Members of a handle, reading them back from the store if they were spilled.
pub fn members_of(m: &Materialized, store: Option<&ClassStore>) -> Result<Vec<Word>, ClassError> {
    if let Some(members) = &m.handle.members {
        return Ok(members.clone());
    }
    let store = store.ok_or_else(|| io::Error::new(io::ErrorKind::NotFound, "class was spilled but no store is given"))?;
    store
        .load(m.handle.kind, &m.handle.seed)?
        .ok_or_else(|| io::Error::new(io::ErrorKind::NotFound, "spilled class file is missing").into())
}

/// Splits a set of words, closed under the moves of `outer`, into classes of
/// kind `inner`. Classes come back in order of their least member's text.
pub fn split_into_classes(members: &[Word], inner: ClassKind) -> Vec<Vec<Word>> {
    let mut left: hashbrown::HashSet<Word> = members.iter().cloned().collect();
    let mut out = Vec::new();
    for w in members {
        if !left.contains(w) {
            continue;
        }
        let class = par_enumerate(w, inner);
        for v in &class {
            left.remove(v);
        }
        out.push(sort_members(class.into_iter().collect()));
    }
    out.sort_by_cached_key(|c| c[0].text());
    out
}
