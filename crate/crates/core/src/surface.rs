//! Suspensions of generalized permutations and their singularity profiles.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_rational::Ratio;

use crate::genperm::{CylinderDiagram, GeneralizedPermutation, Symbol};
use crate::lp::Problem;
use crate::Error;

pub type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Holonomy {
    Abelian,
    Quadratic,
}

/// Lengths and heights of the edge vectors of a suspension polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionData {
    pub lengths: BTreeMap<Symbol, Rational>,
    pub heights: BTreeMap<Symbol, Rational>,
}

/// Degrees of the singularities of a suspension and where the endpoints sit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SingularityProfile {
    pub holonomy: Holonomy,
    /// Sorted in decreasing order, so poles come last.
    pub degrees: Vec<i32>,
    pub genus: u32,
    pub left_degree: i32,
    /// Only reported for Abelian profiles.
    pub right_degree: Option<i32>,
    pub marked_points: usize,
}

impl SingularityProfile {
    pub fn is_degenerate(&self) -> bool {
        self.marked_points > 0
    }
}

/// Occurrence counts used by the prefix constraints, with symbols as dense ids.
struct Prefixes {
    n: usize,
    /// Rows `i = 1..l-1` of top prefixes, then negated bottom prefixes.
    rows: Vec<Vec<i64>>,
    /// Top count minus bottom count of each symbol.
    total: Vec<i64>,
}

fn prefixes<S: Copy + Into<usize>>(top: &[S], bottom: &[S], n: usize) -> Prefixes {
    let mut rows = Vec::with_capacity(top.len() + bottom.len());
    let mut acc = vec![0i64; n];
    for &s in &top[..top.len() - 1] {
        acc[s.into()] += 1;
        rows.push(acc.clone());
    }
    let mut total = acc.clone();
    total[top[top.len() - 1].into()] += 1;
    let mut acc = vec![0i64; n];
    for &s in &bottom[..bottom.len() - 1] {
        acc[s.into()] -= 1;
        rows.push(acc.clone());
    }
    for &s in bottom {
        total[s.into()] -= 1;
    }
    Prefixes { n, rows, total }
}

/// Positive lengths with equal line totals exist iff both lines have a
/// same-line pair or neither has.
pub(crate) fn lengths_feasible<S: Copy + Into<usize>>(top: &[S], bottom: &[S], n: usize) -> bool {
    let mut count = vec![0u8; n];
    let mut top_pair = false;
    for &s in top {
        count[s.into()] += 1;
        top_pair |= count[s.into()] == 2;
    }
    let mut bottom_pair = false;
    let mut count_b = vec![0u8; n];
    for &s in bottom {
        count_b[s.into()] += 1;
        bottom_pair |= count_b[s.into()] == 2;
    }
    top_pair == bottom_pair
}

/// Strict height feasibility, decided through the alternative system:
/// heights exist iff no `y >= 0, sum y = 1, w` with `M^T y + w e = 0`.
pub(crate) fn heights_feasible<S: Copy + Into<usize>>(top: &[S], bottom: &[S], n: usize) -> bool {
    let pre = prefixes(top, bottom, n);
    let r = pre.rows.len();
    let cols = r + 2;
    let mut lp = Problem::new(cols);
    let mut coeffs = vec![0i64; cols];
    for s in 0..pre.n {
        for (k, row) in pre.rows.iter().enumerate() {
            coeffs[k] = row[s];
        }
        coeffs[r] = pre.total[s];
        coeffs[r + 1] = -pre.total[s];
        lp.push_row(&coeffs, 0);
    }
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c = i64::from(k < r);
    }
    lp.push_row(&coeffs, 1);
    !lp.is_feasible()
}

/// Heights with every proper top prefix >= 1, every proper bottom prefix
/// <= -1 and equal totals.
fn height_witness(top: &[usize], bottom: &[usize], n: usize) -> Option<Vec<Rational>> {
    let pre = prefixes(top, bottom, n);
    let r = pre.rows.len();
    let cols = 2 * n + r;
    let mut lp = Problem::new(cols);
    let mut coeffs = vec![0i64; cols];
    for (k, row) in pre.rows.iter().enumerate() {
        coeffs.iter_mut().for_each(|c| *c = 0);
        for s in 0..n {
            coeffs[s] = row[s];
            coeffs[n + s] = -row[s];
        }
        coeffs[2 * n + k] = -1;
        lp.push_row(&coeffs, 1);
    }
    coeffs.iter_mut().for_each(|c| *c = 0);
    for s in 0..n {
        coeffs[s] = pre.total[s];
        coeffs[n + s] = -pre.total[s];
    }
    lp.push_row(&coeffs, 0);
    let x = lp.solve()?;
    Some((0..n).map(|s| x[s] - x[n + s]).collect())
}

/// Symbols as dense ids together with the map back to the caller's labels.
fn dense(p: &GeneralizedPermutation) -> (Vec<usize>, Vec<usize>, Vec<Symbol>) {
    let labels = p.alphabet();
    let id = |s: &Symbol| labels.binary_search(s).expect("symbol in alphabet");
    let t = p.top().iter().map(id).collect();
    let b = p.bottom().iter().map(id).collect();
    (t, b, labels)
}

/// Classical test: no proper prefix of the top line is a permutation of the
/// bottom prefix of the same length.
pub(crate) fn true_permutation_irreducible<S: Copy + Into<usize>>(top: &[S], bottom: &[S]) -> bool {
    let n = top.len();
    let mut seen = vec![0u8; n.max(1)];
    let mut common = 0;
    for k in 0..n.saturating_sub(1) {
        for s in [top[k].into(), bottom[k].into()] {
            seen[s] += 1;
            if seen[s] == 2 {
                common += 1;
            }
        }
        if common == k + 1 {
            return false;
        }
    }
    true
}

/// Lengths and heights (by label) of a suspension polygon, or `None`.
pub fn suspension_data(p: &GeneralizedPermutation) -> Option<SuspensionData> {
    let (t, b, labels) = dense(p);
    let n = labels.len();
    let (lengths, heights): (Vec<Rational>, Vec<Rational>) = if p.is_true_permutation() {
        if !true_permutation_irreducible(&t, &b) {
            return None;
        }
        let mut top_pos = vec![0i128; n];
        let mut bot_pos = vec![0i128; n];
        for (i, &s) in t.iter().enumerate() {
            top_pos[s] = i as i128;
        }
        for (j, &s) in b.iter().enumerate() {
            bot_pos[s] = j as i128;
        }
        // Masur: lengths 1 + k/(n+1) and heights pi(k) - k, k the top position.
        let lengths = (0..n).map(|s| Ratio::new(n as i128 + 1 + top_pos[s], n as i128 + 1)).collect();
        let heights = (0..n).map(|s| Ratio::from_integer(bot_pos[s] - top_pos[s])).collect();
        (lengths, heights)
    } else {
        if !lengths_feasible(&t, &b, n) {
            return None;
        }
        let heights = height_witness(&t, &b, n)?;
        (generic_lengths(&t, n), heights)
    };
    Some(SuspensionData {
        lengths: labels.iter().copied().zip(lengths).collect(),
        heights: labels.iter().copied().zip(heights).collect(),
    })
}

/// Unit lengths for letters shared by the lines; same-line letters get equal
/// totals on both lines, perturbed by distinct small amounts summing to zero.
fn generic_lengths(top: &[usize], n: usize) -> Vec<Rational> {
    let mut in_top = vec![0u8; n];
    for &s in top {
        in_top[s] += 1;
    }
    let top_only: Vec<usize> = (0..n).filter(|&s| in_top[s] == 2).collect();
    let bottom_only: Vec<usize> = (0..n).filter(|&s| in_top[s] == 0).collect();
    let mut lengths = vec![Ratio::from_integer(1); n];
    let mut spread = |group: &[usize], base: usize| {
        let k = group.len() as i128;
        for (i, &s) in group.iter().enumerate() {
            lengths[s] = Ratio::from_integer(base as i128) + Ratio::new(2 * i as i128 - (k - 1), 4 * k);
        }
    };
    spread(&top_only, bottom_only.len());
    spread(&bottom_only, top_only.len());
    lengths
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

/// Turns per-singularity cone angles (in units of pi) into a profile.
fn build_profile(
    holonomy: Holonomy,
    arcs: usize,
    angles: &[u32],
    left: usize,
    right: usize,
) -> Result<SingularityProfile, Error> {
    let degree = |k: u32| -> Result<i32, Error> {
        match holonomy {
            Holonomy::Abelian if k % 2 == 0 && k >= 2 => Ok(k as i32 / 2 - 1),
            Holonomy::Abelian => Err(Error::RoundingUnstable),
            Holonomy::Quadratic if k >= 1 => Ok(k as i32 - 2),
            Holonomy::Quadratic => Err(Error::RoundingUnstable),
        }
    };
    let mut degrees = angles.iter().map(|&k| degree(k)).collect::<Result<Vec<_>, _>>()?;
    let left_degree = degrees[left];
    let right_degree = (holonomy == Holonomy::Abelian).then_some(degrees[right]);
    let v = angles.len();
    // Euler characteristic of the closed surface: V - E + 1 = 2 - 2g, E = arcs + 1.
    let twice_genus = arcs + 1 + 1 - v;
    if twice_genus % 2 != 0 { return Err(Error::RoundingUnstable); }
    let genus = (twice_genus / 2) as u32;
    let sum: i32 = degrees.iter().sum();
    let expected = match holonomy {
        Holonomy::Abelian => 2 * genus as i32 - 2,
        Holonomy::Quadratic => 4 * genus as i32 - 4,
    };
    if sum != expected {
        return Err(Error::RoundingUnstable);
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let marked_points = degrees.iter().filter(|&&d| d == 0).count();
    Ok(SingularityProfile { holonomy, degrees, genus, left_degree, right_degree, marked_points })
}

/// Profile of the suspension, from cone angles of the explicit polygon.
pub fn stratum_of(p: &GeneralizedPermutation) -> Result<SingularityProfile, Error> {
    let holonomy = if p.is_true_permutation() { Holonomy::Abelian } else { Holonomy::Quadratic };
    // One interval exchanged with itself bounds no polygon.
    if p.alphabet_size() == 1 {
        return Err(Error::NotSuspendable);
    }
    let data = suspension_data(p).ok_or(Error::NotSuspendable)?;
    let (t, b, labels) = dense(p);
    let n = labels.len();
    let to_f64 = |r: &Rational| *r.numer() as f64 / *r.denom() as f64;
    let vec_of = |s: usize| -> (f64, f64) { (to_f64(&data.lengths[&labels[s]]), to_f64(&data.heights[&labels[s]])) };
    let arg = |s: usize| {
        let (x, y) = vec_of(s);
        libm::atan2(y, x)
    };
    let (l, m) = (t.len(), b.len());
    // Vertex ids: 0 = left endpoint, 1..l-1 top, l = right endpoint, l+j bottom.
    let pv = |i: usize| i;
    let qv = |j: usize| if j == 0 { 0 } else if j == m { l } else { l + j };
    let count = l + m;
    let mut corner = vec![0f64; count];
    corner[0] = arg(t[0]) - arg(b[0]);
    corner[l] = arg(b[m - 1]) - arg(t[l - 1]);
    for i in 1..l {
        corner[pv(i)] = PI + (arg(t[i]) - arg(t[i - 1]));
    }
    for j in 1..m {
        corner[qv(j)] = PI - (arg(b[j]) - arg(b[j - 1]));
    }
    let mut uf = UnionFind::new(count);
    let mut first: Vec<Option<(bool, usize)>> = vec![None; n];
    let occurrences = t.iter().enumerate().map(|(i, &s)| (s, true, i)).chain(b.iter().enumerate().map(|(j, &s)| (s, false, j)));
    for (s, on_top, pos) in occurrences {
        let ends = |top: bool, k: usize| if top { (pv(k), pv(k + 1)) } else { (qv(k), qv(k + 1)) };
        match first[s] {
            None => first[s] = Some((on_top, pos)),
            Some((top0, pos0)) => {
                let (a0, a1) = ends(top0, pos0);
                let (b0, b1) = ends(on_top, pos);
                if top0 == on_top {
                    // Same line: glued by a half-turn.
                    uf.union(a0, b1);
                    uf.union(a1, b0);
                } else {
                    uf.union(a0, b0);
                    uf.union(a1, b1);
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; count];
    let mut sums: Vec<f64> = Vec::new();
    for v in 0..count {
        let root = uf.find(v);
        if class_of[root] == usize::MAX {
            class_of[root] = sums.len();
            sums.push(0.0);
        }
        sums[class_of[root]] += corner[v];
    }
    let mut angles = Vec::with_capacity(sums.len());
    for s in sums {
        let k = s / PI;
        let r = libm::round(k);
        if libm::fabs(k - r) > 0.1 || r < 0.5 {
            return Err(Error::RoundingUnstable);
        }
        angles.push(r as u32);
    }
    let left = class_of[uf.find(0)];
    let right = class_of[uf.find(l)];
    build_profile(holonomy, n - 1, &angles, left, right)
}

/// Profile of a one-cylinder surface, computed exactly from its boundary words.
///
/// The left endpoint is the singularity at the left end of the first bottom
/// arc and the right endpoint the one at the left end of the first top arc;
/// these are the endpoints of the `TopFirst` cut at basepoints `(0, 0)`.
pub fn stratum_of_diagram(cd: &CylinderDiagram) -> Result<SingularityProfile, Error> {
    if !cd.is_length_feasible() {
        return Err(Error::LengthInfeasible);
    }
    let (t, b) = (cd.top(), cd.bottom());
    let (r, s) = (t.len(), b.len());
    let arcs = r + s;
    let symbol = |a: usize| if a < r { t[a] } else { b[a - r] };
    let on_top = |a: usize| a < r;
    let succ = |a: usize| if a < r { (a + 1) % r } else { r + (a - r + 1) % s };
    // Node 2a is the left end of arc a, 2a+1 its right end.
    let junction = |x: usize| {
        let a = x / 2;
        if x % 2 == 1 {
            2 * succ(a)
        } else {
            let pred = (0..arcs).find(|&c| succ(c) == a).expect("cyclic word");
            2 * pred + 1
        }
    };
    let mut twin = vec![usize::MAX; arcs];
    let mut seen: BTreeMap<Symbol, usize> = BTreeMap::new();
    for a in 0..arcs {
        if let Some(&c) = seen.get(&symbol(a)) {
            twin[a] = c;
            twin[c] = a;
        } else {
            seen.insert(symbol(a), a);
        }
    }
    let glue = |x: usize| {
        let (a, end) = (x / 2, x % 2);
        let c = twin[a];
        if on_top(a) == on_top(c) {
            2 * c + (1 - end)
        } else {
            2 * c + end
        }
    };
    let mut class_of = vec![usize::MAX; 2 * arcs];
    let mut angles: Vec<u32> = Vec::new();
    for start in 0..2 * arcs {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = angles.len();
        let mut junctions = 0;
        let mut x = start;
        loop {
            class_of[x] = id;
            let y = junction(x);
            class_of[y] = id;
            junctions += 1;
            x = glue(y);
            if x == start {
                break;
            }
        }
        angles.push(junctions);
    }
    let holonomy = if cd.has_same_line_pair() { Holonomy::Quadratic } else { Holonomy::Abelian };
    let left = class_of[2 * r];
    let right = class_of[0];
    build_profile(holonomy, cd.arc_count(), &angles, left, right)
}

/// Whether the suspension has a marked point.
pub fn is_degenerate(p: &GeneralizedPermutation) -> Result<bool, Error> {
    Ok(stratum_of(p)?.is_degenerate())
}
