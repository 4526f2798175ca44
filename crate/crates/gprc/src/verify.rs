//! Verification suites: golden tables plus library calls, reported as a
//! list of named checks.

use std::fmt::Write as _;
use std::time::Instant;

use gprc_core::components::{
    components_of, hyp_spin_parity_closed_form, is_hyperelliptic_diagram, representative, strata_up_to, Classifier,
    ComponentId, ComponentLabel, StratumSpec,
};
use gprc_core::rauzy::{self, extended_class_through_reducibles, ClassKind, Undefined, Word};
use gprc_core::spin::spin_parity;
use gprc_core::surface::{stratum_of, stratum_of_diagram, SingularityProfile};
use gprc_core::{Error, GeneralizedPermutation, Symbol};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bfs::{par_enumerate, with_jobs};
use crate::class::{sorted_class, split_into_classes};
use crate::golden::{self, Block, Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    #[value(name = "appendix-d")]
    AppendixD,
    #[value(name = "table-1")]
    #[serde(rename = "table-1")]
    Table1,
    Adjacency,
    Conventions,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::AppendixD, Suite::Table1, Suite::Adjacency, Suite::Conventions, Suite::Properties];

    pub fn name(self) -> &'static str {
        match self {
            Suite::AppendixD => "appendix-d",
            Suite::Table1 => "table-1",
            Suite::Adjacency => "adjacency",
            Suite::Conventions => "conventions",
            Suite::Properties => "properties",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Check { name: name.into(), expected, actual, pass }
    }

    /// A check whose pass/fail is decided by the caller.
    pub fn judged(name: impl Into<String>, expected: impl ToString, actual: impl ToString, pass: bool) -> Self {
        Check { name: name.into(), expected: expected.to_string(), actual: actual.to_string(), pass }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub elapsed_seconds: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Checks whose name starts with `prefix`.
    pub fn group<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.name.starts_with(prefix))
    }

    /// Plain text table, one check per line.
    pub fn render(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            if c.pass {
                let _ = writeln!(out, "{mark} {:width$}  {}", c.name, c.actual);
            } else {
                let _ = writeln!(out, "{mark} {:width$}  expected {}, got {}", c.name, c.expected, c.actual);
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{}: {} checks, {} failed, {:.1}s",
            self.suite.name(),
            self.checks.len(),
            failed,
            self.elapsed_seconds
        );
        out
    }
}

/// Runs one suite. `jobs` sets the thread count of the class searches.
pub fn run(suite: Suite, jobs: Option<usize>) -> VerifyReport {
    let start = Instant::now();
    let checks = with_jobs(jobs, || {
        let mut v = Verifier::new();
        match suite {
            Suite::AppendixD => v.appendix_d(),
            Suite::Table1 => v.table_1(),
            Suite::Adjacency => v.adjacency(),
            Suite::Conventions => v.conventions(),
            Suite::Properties => v.properties(),
        }
    });
    VerifyReport { suite, checks, elapsed_seconds: start.elapsed().as_secs_f64() }
}

fn word(p: &GeneralizedPermutation) -> Word {
    Word::from_perm(p).expect("small alphabet")
}

/// Compares components up to the order in which zeros are listed; the
/// endpoint degrees are checked separately.
fn component_check(name: String, expected: &ComponentId, got: Result<ComponentId, Error>) -> Check {
    let pass = matches!(&got, Ok(c) if c == expected);
    Check::judged(name, expected, describe(got), pass)
}

fn describe(r: Result<ComponentId, Error>) -> String {
    match r {
        Ok(c) => c.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn profile_text(p: &SingularityProfile) -> String {
    match StratumSpec::from_profile(p) {
        Ok(s) => {
            let mut sorted = s.clone();
            sorted.sort_zeros();
            sorted.to_string()
        }
        Err(_) => format!("{:?} with {} marked points", p.degrees, p.marked_points),
    }
}

fn sorted_text(s: &StratumSpec) -> String {
    let mut s = s.clone();
    s.sort_zeros();
    s.to_string()
}

/// Keeps labels: removes the given symbols without renaming the rest.
fn erase_keeping_names(top: &[Symbol], bottom: &[Symbol], victims: &[Symbol]) -> (Vec<Symbol>, Vec<Symbol>) {
    let keep = |w: &[Symbol]| w.iter().copied().filter(|s| !victims.contains(s)).collect();
    (keep(top), keep(bottom))
}

fn distinct_entries(c: &ComponentId) -> usize {
    let mut d = c.stratum.sorted_degrees();
    d.dedup();
    d.len()
}

struct Verifier {
    classifier: Classifier,
}

impl Verifier {
    fn new() -> Self {
        Verifier { classifier: Classifier::with_enumerator(par_enumerate) }
    }

    fn rows<'a>(family: &'a str, blocks: &'static [Block]) -> impl Iterator<Item = (String, &'static Row)> + 'a {
        blocks.iter().flat_map(move |b| b.iter().map(move |r| (format!("{family}/{}", r.seed), r)))
    }

    fn appendix_d(&mut self) -> Vec<Check> {
        let mut out = Vec::new();
        for (family, blocks) in [("abelian", golden::ABELIAN), ("quadratic", golden::QUADRATIC)] {
            for (name, r) in Self::rows(family, blocks) {
                let p = r.permutation();
                let c = r.component();
                out.push(Check::new(format!("{name}/count"), r.count, par_enumerate(&word(&p), ClassKind::Rauzy).len()));
                match stratum_of(&p) {
                    Ok(prof) => {
                        out.push(Check::new(format!("{name}/stratum"), sorted_text(&c.stratum), profile_text(&prof)));
                        out.push(Check::new(format!("{name}/left"), r.left, prof.left_degree));
                    }
                    Err(e) => out.push(Check::new(format!("{name}/stratum"), sorted_text(&c.stratum), format!("error: {e}"))),
                }
                out.push(component_check(format!("{name}/component"), &c, self.classifier.classify(&p)));
                let parity = match c.label {
                    ComponentLabel::EvenSpin => Some(0),
                    ComponentLabel::OddSpin => Some(1),
                    ComponentLabel::Hyperelliptic => hyp_spin_parity_closed_form(&c.stratum).ok(),
                    _ => None,
                };
                if let Some(want) = parity {
                    let got = spin_parity(&p).map(|x| x.to_string()).unwrap_or_else(|e| format!("error: {e}"));
                    out.push(Check::new(format!("{name}/spin"), want, got));
                }
            }
            for block in blocks {
                out.extend(self.block_checks(family, block));
            }
        }
        out
    }

    /// One extended class per block: its size is the sum of the rows, every
    /// row seed lies in it, and it splits into as many Rauzy classes as
    /// there are distinct degrees.
    fn block_checks(&self, family: &str, block: &Block) -> Vec<Check> {
        let first = &block[0];
        let members = sorted_class(&word(&first.permutation()), ClassKind::Extended, None);
        let name = format!("extended/{family}/{}", first.seed);
        let total: usize = block.iter().map(|r| r.count).sum();
        let set: hashbrown::HashSet<&Word> = members.iter().collect();
        let inside = block.iter().filter(|r| set.contains(&word(&r.permutation()))).count();
        let mut out = vec![
            Check::new(format!("{name}/count"), total, members.len()),
            Check::new(format!("{name}/rows-inside"), block.len(), inside),
        ];
        out.push(split_check(format!("split/{family}/{}", first.seed), &first.component(), &members));
        out
    }

    fn table_1(&mut self) -> Vec<Check> {
        let mut out = Vec::new();
        let mut classes: Vec<(ComponentId, Vec<Word>)> = Vec::new();
        for (name, count, seed) in golden::EXCEPTIONAL {
            let c = golden::component(name);
            let p: GeneralizedPermutation = seed.parse().expect("golden seed");
            let members = sorted_class(&word(&p), ClassKind::Extended, None);
            out.push(Check::new(format!("cardinality/{name}"), count, members.len()));
            let got = stratum_of(&p).map(|prof| profile_text(&prof)).unwrap_or_else(|e| format!("error: {e}"));
            out.push(Check::new(format!("stratum/{name}"), sorted_text(&c.stratum), got));
            out.push(split_check(format!("split/{name}"), &c, &members));
            classes.push((c, members));
        }
        for (irr, a) in classes.iter().filter(|(c, _)| c.label == ComponentLabel::Irr) {
            let (_, b) = classes
                .iter()
                .find(|(c, _)| c.label == ComponentLabel::Reg && c.stratum == irr.stratum)
                .expect("both components tabulated");
            let small: hashbrown::HashSet<&Word> = a.iter().collect();
            let shared = b.iter().filter(|w| small.contains(w)).count();
            out.push(Check::new(format!("disjoint/{}", sorted_text(&irr.stratum)), 0, shared));
        }
        out
    }

    fn adjacency(&mut self) -> Vec<Check> {
        let mut out = Vec::new();
        let chain = golden::REGULAR_CHAIN;
        for (name, top, bottom) in chain {
            let c = golden::component(name);
            let p = GeneralizedPermutation::new(top.to_vec(), bottom.to_vec()).expect("golden permutation");
            let got = stratum_of(&p).map(|prof| profile_text(&prof)).unwrap_or_else(|e| format!("error: {e}"));
            out.push(Check::new(format!("reg-chain/{name}/stratum"), sorted_text(&c.stratum), got));
            out.push(Check::new(format!("reg-chain/{name}/cylindrical"), true, p.is_cylindrical()));
            out.push(component_check(format!("reg-chain/{name}/component"), &c, self.classifier.classify(&p)));
        }
        // Each step contracts saddle connections, i.e. erases symbols, without renaming.
        for (step, victims) in chain.windows(2).zip([&[1, 2, 4, 5, 7, 8][..], &[3], &[6]]) {
            let (from, to) = (&step[0], &step[1]);
            let got = erase_keeping_names(from.1, from.2, victims);
            out.push(Check::new(
                format!("reg-chain/{} -> {}", from.0, to.0),
                format!("{:?} / {:?}", to.1, to.2),
                format!("{:?} / {:?}", got.0, got.1),
            ));
        }
        // Merging the pole: erase 14 everywhere.
        for ((from, top, bottom), (name, mtop, mbottom)) in chain[1..].iter().zip(golden::MERGED_CHAIN) {
            let got = erase_keeping_names(top, bottom, &[14]);
            out.push(Check::new(
                format!("pole-merge/{from} -> {name}"),
                format!("{mtop:?} / {mbottom:?}"),
                format!("{:?} / {:?}", got.0, got.1),
            ));
            let p = GeneralizedPermutation::new(mtop.to_vec(), mbottom.to_vec()).expect("golden permutation");
            let c = golden::component(name);
            let got = stratum_of(&p).map(|prof| profile_text(&prof)).unwrap_or_else(|e| format!("error: {e}"));
            out.push(Check::new(format!("pole-merge/{name}/stratum"), sorted_text(&c.stratum), got));
            out.push(Check::new(format!("pole-merge/{name}/irreducible"), true, rauzy::is_irreducible(&p)));
        }
        for (from, victim, to) in golden::IRREGULAR_CHAIN {
            let p = golden::exceptional(from).erase_symbols(&[victim]).map(|q| q.to_string());
            out.push(Check::new(
                format!("irr-chain/{from} erase {victim}"),
                golden::exceptional(to),
                p.unwrap_or_else(|e| format!("error: {e}")),
            ));
            let q = golden::exceptional(to);
            out.push(component_check(format!("irr-chain/{to}/component"), &golden::component(to), self.classifier.classify(&q)));
        }
        out
    }

    fn conventions(&mut self) -> Vec<Check> {
        let mut out = Vec::new();
        let mut empty = Vec::new();
        for stratum in strata_up_to(10) {
            let comps = components_of(&stratum);
            if comps.is_empty() {
                let got = representative(&ComponentId { stratum: stratum.clone(), label: ComponentLabel::Connected });
                out.push(Check::new(format!("empty/{stratum}"), "refused: stratum is empty", match got {
                    Err(Error::EmptyStratum) => "refused: stratum is empty".to_string(),
                    Err(e) => format!("error: {e}"),
                    Ok(p) => format!("built {p}"),
                }));
                empty.push(stratum.to_string());
                continue;
            }
            for s in stratum.endpoint_variants() {
                for c in components_of(&s) {
                    out.push(self.sweep_check(&c));
                }
            }
        }
        empty.sort();
        out.push(Check::new("empty/list", "Q(), Q(1,-1), Q(3,1), Q(4)", empty.join(", ")));
        for g in 2..=6u32 {
            let s = StratumSpec::abelian(vec![2 * g as i32 - 2]).expect("valid stratum");
            out.push(spin_check(format!("spin/H({})", 2 * g - 2), &s, ((g + 1) / 2 % 2) as u8));
        }
        for k in 2..=4 {
            let s = StratumSpec::abelian(vec![2 * k, 2 * k]).expect("valid stratum");
            out.push(spin_check(format!("spin/H({0},{0})", 2 * k), &s, ((k + 1) % 2) as u8));
        }
        // Erasing {3,5} from the principal genus 3 permutation.
        let base = representative(&golden::component("H(1,1,1,1)")).expect("principal stratum");
        let (t, b) = erase_keeping_names(base.top(), base.bottom(), &[3, 5]);
        out.push(Check::new("example/H(1,1,1,1) base", "0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0", &base));
        out.push(Check::new("example/erase 3 5", "[0, 1, 2, 4, 6, 7, 8] / [4, 2, 8, 7, 6, 1, 0]", format!("{t:?} / {b:?}")));
        let p = GeneralizedPermutation::new(t, b).expect("erasure keeps two occurrences");
        match stratum_of(&p) {
            Ok(prof) => {
                out.push(Check::new("example/stratum", "H(3,1)", profile_text(&prof)));
                out.push(Check::new("example/left degree", 3, prof.left_degree));
            }
            Err(e) => out.push(Check::new("example/stratum", "H(3,1)", format!("error: {e}"))),
        }
        out
    }

    /// Representative of `c` is cylindrical, irreducible, in the right
    /// stratum with the right endpoints and shape, and classifies back to `c`.
    fn sweep_check(&mut self, c: &ComponentId) -> Check {
        let name = format!("sweep/{c}");
        let p = match representative(c) {
            Ok(p) => p,
            Err(e) => return Check::new(name, c, format!("error: {e}")),
        };
        let mut problems = Vec::new();
        if !p.is_cylindrical() {
            problems.push("not cylindrical".to_string());
        }
        if !rauzy::is_irreducible(&p) {
            problems.push("reducible".to_string());
        }
        match stratum_of(&p) {
            Ok(prof) => {
                if !c.stratum.matches(&prof) {
                    problems.push(format!("lands in {}", profile_text(&prof)));
                }
                if !c.stratum.zeros().is_empty() && prof.left_degree != c.stratum.left_degree() {
                    problems.push(format!("left degree {}", prof.left_degree));
                }
                if prof.right_degree != c.stratum.right_degree() {
                    problems.push(format!("right degree {:?}", prof.right_degree));
                }
            }
            Err(e) => problems.push(format!("stratum: {e}")),
        }
        if let Ok(cd) = p.to_cylinder_diagram() {
            let hyp = is_hyperelliptic_diagram(&cd).unwrap_or(false);
            let multi = components_of(&c.stratum).len() > 1;
            if c.label == ComponentLabel::Hyperelliptic && !hyp {
                problems.push("no hyperelliptic shape".into());
            } else if c.label != ComponentLabel::Hyperelliptic && multi && hyp {
                problems.push("hyperelliptic shape".into());
            }
        }
        match self.classifier.classify(&p) {
            Ok(back) if back == *c => {}
            other => problems.push(format!("classified as {}", describe(other))),
        }
        let actual = if problems.is_empty() { c.to_string() } else { format!("{p}: {}", problems.join("; ")) };
        Check::new(name, c, actual)
    }

    fn properties(&mut self) -> Vec<Check> {
        let mut out = Vec::new();
        for n in 2..=9usize {
            let top: Vec<Symbol> = (0..n as Symbol).collect();
            let bottom: Vec<Symbol> = top.iter().rev().copied().collect();
            let p = GeneralizedPermutation::new(top, bottom).expect("reversal");
            out.push(Check::new(
                format!("hyp-law/n={n}"),
                (1usize << (n - 1)) - 1,
                par_enumerate(&word(&p), ClassKind::Rauzy).len(),
            ));
        }
        out.extend(random_checks(10_000, 0x5eed));
        for (name, r) in Self::rows("abelian", golden::ABELIAN).chain(Self::rows("quadratic", golden::QUADRATIC)) {
            out.extend(class_checks(&name, r));
        }
        out.extend(small_alphabet_checks(5));
        out
    }
}

fn spin_check(name: String, s: &StratumSpec, closed: u8) -> Check {
    let c = ComponentId { stratum: s.clone(), label: ComponentLabel::Hyperelliptic };
    let got = representative(&c)
        .and_then(|p| spin_parity(&p))
        .map(|x| x.to_string())
        .unwrap_or_else(|e| format!("error: {e}"));
    let table = hyp_spin_parity_closed_form(s).map(|x| x.to_string()).unwrap_or_else(|e| format!("error: {e}"));
    Check::judged(name, closed, format!("{got} (closed form {table})"), got == closed.to_string() && table == got)
}

/// Splits an extended class into Rauzy classes and compares the count with
/// the number of distinct degrees, poles included.
fn split_check(name: String, c: &ComponentId, members: &[Word]) -> Check {
    let sizes: Vec<String> = split_into_classes(members, ClassKind::Rauzy).iter().map(|r| r.len().to_string()).collect();
    let k = distinct_entries(c);
    Check::judged(name, format!("{k} Rauzy classes"), format!("{} Rauzy classes ({})", sizes.len(), sizes.join(" + ")), sizes.len() == k)
}

/// A uniformly shuffled generalized permutation on `n` symbols, cut at random.
fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> GeneralizedPermutation {
    let mut letters: Vec<Symbol> = (0..n as Symbol).flat_map(|s| [s, s]).collect();
    letters.shuffle(rng);
    let k = rng.gen_range(1..2 * n);
    GeneralizedPermutation::canonical_from(&letters[..k], &letters[k..]).expect("each symbol twice")
}

/// Move identities on random irreducible permutations.
fn random_checks(count: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample = Vec::with_capacity(count);
    while sample.len() < count {
        let n = rng.gen_range(2..=10);
        let p = random_perm(&mut rng, n);
        if rauzy::is_irreducible(&p) {
            sample.push(p);
        }
    }
    let true_perms = sample.iter().filter(|p| p.is_true_permutation()).count();
    let tally = |name: &str, ok: &dyn Fn(&GeneralizedPermutation) -> bool| {
        let good = sample.iter().filter(|p| ok(p)).count();
        Check::new(format!("random/{name}"), format!("{count}/{count}"), format!("{good}/{count}"))
    };
    vec![
        Check::judged("random/sample", format!("{count} irreducible"), format!("{count} irreducible, {true_perms} true permutations"), true),
        tally("c is an involution", &|p| rauzy::op_c(&rauzy::op_c(p)) == *p),
        tally("a(p^-1) = b(p)^-1", &|p| rauzy::op_a(&p.inverse()).ok() == rauzy::op_b(p).ok().map(|q| q.inverse())),
        tally("b(p^-1) = a(p)^-1", &|p| rauzy::op_b(&p.inverse()).ok() == rauzy::op_a(p).ok().map(|q| q.inverse())),
        tally("c(p^-1) = c(p)^-1", &|p| rauzy::op_c(&p.inverse()) == rauzy::op_c(p).inverse()),
        tally("a, b undefined together", &|p| {
            (rauzy::op_a(p) == Err(Undefined::SameRightmost)) == (rauzy::op_b(p) == Err(Undefined::SameRightmost))
        }),
    ]
}

/// Invariants over every member of a tabulated Rauzy class.
fn class_checks(name: &str, r: &Row) -> Vec<Check> {
    let p = r.permutation();
    let seed = stratum_of(&p).expect("golden seeds are suspendable");
    let members = sorted_class(&word(&p), ClassKind::Rauzy, None);
    let n = members.len();
    let (mut same, mut balanced, mut cylindrical, mut agree) = (0, 0, 0, 0);
    for w in &members {
        let q = w.to_perm();
        if let Ok(prof) = stratum_of(&q) {
            if w.is_irreducible()
                && prof.degrees == seed.degrees
                && prof.genus == seed.genus
                && prof.holonomy == seed.holonomy
                && prof.left_degree == seed.left_degree
            {
                same += 1;
            }
        }
        if w.top().len() == w.bottom().len() {
            balanced += 1;
        }
        if let Ok(cd) = q.to_cylinder_diagram() {
            cylindrical += 1;
            let (a, b) = (stratum_of(&q), stratum_of_diagram(&cd));
            if let (Ok(a), Ok(b)) = (a, b) {
                if a.degrees == b.degrees && a.genus == b.genus && a.holonomy == b.holonomy {
                    agree += 1;
                }
            }
        }
    }
    vec![
        Check::new(format!("constancy/{name}"), format!("{n}/{n}"), format!("{same}/{n}")),
        Check::judged(format!("balanced/{name}"), "at least 1", format!("{balanced}/{n}"), balanced > 0),
        Check::new(format!("polygon/{name}"), format!("{cylindrical}/{cylindrical}"), format!("{agree}/{cylindrical}")),
    ]
}

/// Every canonical generalized permutation on `n` symbols.
fn all_permutations(n: usize) -> Vec<Word> {
    // Words in which symbols first appear in order 0, 1, 2, ...
    fn fill(word: &mut Vec<Symbol>, used: &mut [u8], next: Symbol, out: &mut Vec<Vec<Symbol>>) {
        if word.len() == 2 * used.len() {
            out.push(word.clone());
            return;
        }
        for s in 0..used.len() as Symbol {
            if s > next || used[s as usize] == 2 {
                continue;
            }
            used[s as usize] += 1;
            word.push(s);
            fill(word, used, if s == next { next + 1 } else { next }, out);
            word.pop();
            used[s as usize] -= 1;
        }
    }
    let mut words = Vec::new();
    fill(&mut Vec::new(), &mut vec![0; n], 0, &mut words);
    let mut out = Vec::new();
    for w in words {
        for k in 1..2 * n {
            let p = GeneralizedPermutation::canonical_from(&w[..k], &w[k..]).expect("each symbol twice");
            out.push(word(&p));
        }
    }
    out
}

/// Exhaustive over small alphabets: the two definitions of the extended
/// class agree, and each nondegenerate extended class splits into as many
/// Rauzy classes as its stratum has distinct degrees.
fn small_alphabet_checks(max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let (mut split_total, mut split_deviations) = (0, Vec::new());
    for n in 2..=max {
        let irreducible: Vec<Word> = all_permutations(n).into_iter().filter(Word::is_irreducible).collect();
        let classes = split_into_classes(&irreducible, ClassKind::Extended);
        let covered: usize = classes.iter().map(Vec::len).sum();
        out.push(Check::new(format!("ext-defs/n={n}/partition"), irreducible.len(), covered));
        let same = classes
            .iter()
            .filter(|c| {
                let literal: hashbrown::HashSet<Word> = extended_class_through_reducibles(&c[0]);
                literal.len() == c.len() && c.iter().all(|w| literal.contains(w))
            })
            .count();
        out.push(Check::new(format!("ext-defs/n={n}"), format!("{} of {} classes agree", classes.len(), classes.len()), format!("{same} of {} classes agree", classes.len())));
        for c in &classes {
            let prof = stratum_of(&c[0].to_perm()).expect("irreducible");
            let Ok(stratum) = StratumSpec::from_profile(&prof) else { continue };
            split_total += 1;
            let inner = split_into_classes(c, ClassKind::Rauzy).len();
            let mut d = stratum.sorted_degrees();
            d.dedup();
            if inner != d.len() {
                split_deviations.push(format!("{} in {}: {inner} classes", c[0], sorted_text(&stratum)));
            }
        }
    }
    let actual = if split_deviations.is_empty() {
        format!("all {split_total} classes match")
    } else {
        format!("{} of {split_total} deviate: {}", split_deviations.len(), split_deviations.join("; "))
    };
    out.push(Check::judged(format!("split/all nondegenerate classes, n<={max}"), "no deviation", actual, split_deviations.is_empty()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_permutations_counts() {
        // Pairings of 2n letters times the 2n-1 cuts.
        assert_eq!(all_permutations(2).len(), 3 * 3);
        assert_eq!(all_permutations(3).len(), 15 * 5);
        let mut distinct = all_permutations(4);
        let n = distinct.len();
        distinct.sort_by_cached_key(|w| w.text());
        distinct.dedup();
        assert_eq!(distinct.len(), n);
    }

    #[test]
    fn report_rendering() {
        let r = VerifyReport {
            suite: Suite::Table1,
            checks: vec![Check::new("a", 1, 1), Check::new("b", 2, 3)],
            elapsed_seconds: 0.25,
        };
        assert!(!r.passed());
        let text = r.render();
        assert!(text.contains("ok   a  1"));
        assert!(text.contains("FAIL b  expected 2, got 3"));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"suite\":\"table-1\""));
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.checks, r.checks);
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Adjacency] {
            let r = run(suite, Some(1));
            assert!(r.passed(), "{}", r.render());
        }
    }
}
