//! Level-synchronous parallel enumeration of classes.

use gprc_core::rauzy::{for_each_successor, ClassKind, Word};
use hashbrown::HashSet;
use rayon::prelude::*;

/// All members of the class of `seed`.
///
/// Each level's images are computed in parallel against a read-only view of
/// the members found so far, then merged in frontier order. The member set
/// does not depend on the thread count; callers sort it for output.
pub fn par_enumerate(seed: &Word, kind: ClassKind) -> HashSet<Word> {
    let mut seen = HashSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed.clone()];
    while !frontier.is_empty() {
        let found: Vec<Word> = frontier
            .par_iter()
            .flat_map_iter(|w| {
                let mut out = Vec::with_capacity(3);
                for_each_successor(w, kind, |v, check| {
                    if !seen.contains(&v) && (!check || v.is_irreducible()) {
                        out.push(v);
                    }
                });
                out
            })
            .collect();
        frontier = found.into_iter().filter(|v| seen.insert(v.clone())).collect();
    }
    seen
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool when `jobs` is `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gprc_core::rauzy::enumerate;

    fn w(s: &str) -> Word {
        Word::from_perm(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn matches_sequential_search() {
        for (seed, kind) in [
            ("0 1 2 3 4 5 / 3 2 5 4 1 0", ClassKind::Rauzy),
            ("0 1 2 3 4 5 / 3 2 5 4 1 0", ClassKind::Extended),
            ("0 1 2 1 3 / 4 3 4 2 0", ClassKind::Extended),
        ] {
            let seq = enumerate(&w(seed), kind);
            for jobs in [1, 3] {
                assert_eq!(with_jobs(Some(jobs), || par_enumerate(&w(seed), kind)), seq);
            }
        }
    }
}
