//! Exact feasibility for `A x = b, x >= 0` with small integer data.
//!
//! Phase-one simplex on a fraction-free integer tableau. Every row carries its
//! own positive scale (the coefficient of its basic variable), rows are kept
//! gcd-reduced, and Bland's rule guarantees termination. Artificial columns
//! are never stored: an artificial variable that leaves the basis can not
//! come back.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn reduce(row: &mut [i128]) {
    let mut g = 0;
    for &v in row.iter() {
        if v != 0 {
            g = gcd(g, v);
            if g == 1 {
                return;
            }
        }
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

#[inline]
fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("lp coefficient overflow")
}

/// Basis entry: `Art(r)` is the artificial variable of row `r`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Var {
    Art(usize),
    Col(usize),
}

/// A feasibility problem `A x = b, x >= 0` with `b >= 0`.
pub struct Problem {
    rows: usize,
    cols: usize,
    /// Row-major, each row `cols` coefficients followed by the right-hand side.
    data: Vec<i128>,
}

impl Problem {
    pub fn new(cols: usize) -> Self {
        Problem { rows: 0, cols, data: Vec::new() }
    }

    /// Adds `sum coeffs[j] x_j = rhs`; the row is negated if `rhs < 0`.
    pub fn push_row(&mut self, coeffs: &[i64], rhs: i64) {
        debug_assert_eq!(coeffs.len(), self.cols);
        let sign = if rhs < 0 { -1 } else { 1 };
        self.data.extend(coeffs.iter().map(|&c| (sign * c) as i128));
        self.data.push((sign * rhs) as i128);
        self.rows += 1;
    }

    /// Returns a feasible point when one exists.
    pub fn solve(self) -> Option<Vec<Ratio<i128>>> {
        self.run(true)
    }

    /// Decides feasibility without extracting a point.
    pub fn is_feasible(self) -> bool {
        self.run(false).is_some()
    }

    fn run(self, want_point: bool) -> Option<Vec<Ratio<i128>>> {
        let Problem { rows, cols, mut data } = self;
        let w = cols + 1;
        let mut basis: Vec<Var> = (0..rows).map(Var::Art).collect();
        // Objective "scale * (sum of artificials) + g . x = value".
        let mut obj = vec![0i128; w + 1];
        for r in 0..rows {
            for j in 0..w {
                obj[j] += data[r * w + j];
            }
        }
        obj[w] = 1;
        let mut is_basic = vec![false; cols];

        loop {
            let Some(col) = (0..cols).find(|&j| !is_basic[j] && obj[j] > 0) else {
                break;
            };
            // Minimum ratio test; ties go to artificials, then the smallest column.
            let mut leave: Option<usize> = None;
            for r in 0..rows {
                let a = data[r * w + col];
                if a <= 0 {
                    continue;
                }
                leave = Some(match leave {
                    None => r,
                    Some(cur) => {
                        let lhs = mul(data[r * w + cols], data[cur * w + col]);
                        let rhs = mul(data[cur * w + cols], a);
                        let ord = |v: Var| match v {
                            Var::Art(i) => i,
                            Var::Col(j) => rows + j,
                        };
                        if lhs < rhs || (lhs == rhs && ord(basis[r]) < ord(basis[cur])) {
                            r
                        } else {
                            cur
                        }
                    }
                });
            }
            // Phase one is bounded below, so some row always has a positive entry.
            let r = leave.expect("phase-one objective is bounded");
            let pivot_row: Vec<i128> = data[r * w..(r + 1) * w].to_vec();
            let p = pivot_row[col];
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = data[i * w + col];
                if f == 0 {
                    continue;
                }
                let row = &mut data[i * w..(i + 1) * w];
                for j in 0..w {
                    row[j] = mul(row[j], p) - mul(f, pivot_row[j]);
                }
                reduce(row);
            }
            let f = obj[col];
            for j in 0..w {
                obj[j] = mul(obj[j], p) - mul(f, pivot_row[j]);
            }
            obj[w] = mul(obj[w], p);
            reduce(&mut obj);
            if let Var::Col(old) = basis[r] {
                is_basic[old] = false;
            }
            basis[r] = Var::Col(col);
            is_basic[col] = true;
        }

        if obj[cols] != 0 {
            return None;
        }
        let mut point = Vec::new();
        if want_point {
            point = vec![Ratio::from_integer(0); cols];
            for (r, v) in basis.iter().enumerate() {
                if let Var::Col(j) = *v {
                    point[j] = Ratio::new(data[r * w + cols], data[r * w + j]);
                }
            }
        }
        Some(point)
    }
}
