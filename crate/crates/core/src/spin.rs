//! Parity of the spin structure of an Abelian permutation with even degrees.
//!
//! The first-return cycles `c_i` span the homology. Over GF(2) we carry their
//! intersection matrix and the values `phi(c_i) = ind + 1`, then peel off
//! symplectic pairs one at a time. The parity is the sum of
//! `phi(a) phi(b)` over the pairs.

use alloc::vec;
use alloc::vec::Vec;

use crate::genperm::GeneralizedPermutation;
use crate::surface::{stratum_of, Holonomy};
use crate::Error;

/// Intersection numbers of the first-return cycles mod 2, with `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub omega: Vec<Vec<u8>>,
    pub phi: Vec<u8>,
}

impl IntersectionForm {
    pub fn size(&self) -> usize {
        self.phi.len()
    }
}

/// Outcome of the reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinReduction {
    pub parity: u8,
    /// Number of symplectic pairs extracted; equals the genus.
    pub pairs: usize,
}

pub fn omega_matrix(p: &GeneralizedPermutation) -> Result<IntersectionForm, Error> {
    if !p.is_true_permutation() {
        return Err(Error::NotTruePermutation);
    }
    let c = p.canonical();
    let n = c.alphabet_size();
    // Canonical top line is 0..n, so the bottom position is pi^{-1}.
    let mut pos = vec![0usize; n];
    for (k, &s) in c.bottom().iter().enumerate() {
        pos[s as usize] = k;
    }
    let omega = (0..n)
        .map(|i| (0..n).map(|j| u8::from((i < j) != (pos[i] < pos[j]) && i != j)).collect())
        .collect();
    Ok(IntersectionForm { omega, phi: vec![1; n] })
}

/// Runs the reduction, choosing the partner of the first live vector with
/// `pick` among the candidates (sorted ascending).
pub fn reduce_with(form: &IntersectionForm, mut pick: impl FnMut(&[usize]) -> usize) -> SpinReduction {
    let mut om = form.omega.clone();
    let mut phi = form.phi.clone();
    let mut live: Vec<usize> = (0..form.size()).collect();
    let mut parity = 0u8;
    let mut pairs = 0;
    loop {
        let snapshot = live.clone();
        live.retain(|&i| snapshot.iter().any(|&j| om[i][j] == 1));
        let Some(&f) = live.first() else { break };
        let cands: Vec<usize> = live.iter().copied().filter(|&j| om[f][j] == 1).collect();
        let j = pick(&cands);
        parity ^= phi[f] & phi[j];
        pairs += 1;
        live.retain(|&i| i != f && i != j);
        let (of, oj) = (om[f].clone(), om[j].clone());
        for &i in &live {
            phi[i] ^= (oj[i] & phi[f]) ^ (of[i] & phi[j]) ^ (of[i] & oj[i]);
        }
        for &k in &live {
            for &l in &live {
                om[k][l] ^= (of[k] & oj[l]) ^ (oj[k] & of[l]);
            }
        }
    }
    SpinReduction { parity, pairs }
}

/// Reduction with the least admissible partner.
pub fn reduce(form: &IntersectionForm) -> SpinReduction {
    reduce_with(form, |c| c[0])
}

/// Spin parity (0 even, 1 odd) of an irreducible true permutation whose
/// stratum has only even degrees and no marked points.
pub fn spin_parity(p: &GeneralizedPermutation) -> Result<u8, Error> {
    let form = omega_matrix(p)?;
    let profile = stratum_of(p)?;
    debug_assert_eq!(profile.holonomy, Holonomy::Abelian);
    if profile.marked_points > 0 {
        return Err(Error::DegenerateInput);
    }
    if profile.degrees.iter().any(|d| d % 2 != 0) {
        return Err(Error::OddDegrees);
    }
    let r = reduce(&form);
    debug_assert_eq!(r.pairs, profile.genus as usize);
    Ok(r.parity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(s: &str) -> GeneralizedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn omega_of_reversals() {
        let f = omega_matrix(&gp("0 1 2 3 / 3 2 1 0")).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(f.omega[i][j], u8::from(i != j));
            }
        }
        let f = omega_matrix(&gp("0 1 / 1 0")).unwrap();
        assert_eq!(f.omega, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(f.phi, vec![1, 1]);
        assert_eq!(omega_matrix(&gp("0 0 / 1 1")).unwrap_err(), Error::NotTruePermutation);
    }

    #[test]
    fn known_parities() {
        assert_eq!(spin_parity(&gp("0 1 2 3 4 5 / 3 2 5 4 1 0")).unwrap(), 1);
        assert_eq!(spin_parity(&gp("0 1 2 3 4 5 6 7 / 5 4 3 2 7 6 1 0")).unwrap(), 0);
        assert_eq!(spin_parity(&gp("0 1 2 3 / 3 2 1 0")).unwrap(), 1);
    }

    #[test]
    fn rejections() {
        assert_eq!(spin_parity(&gp("0 1 2 3 4 / 4 3 2 1 0")).unwrap_err(), Error::OddDegrees);
        assert_eq!(spin_parity(&gp("0 1 2 / 2 1 0")).unwrap_err(), Error::DegenerateInput);
        assert_eq!(spin_parity(&gp("0 1 1 / 2 2 0")).unwrap_err(), Error::NotTruePermutation);
    }

    #[test]
    fn pair_count_is_the_genus() {
        let f = omega_matrix(&gp("0 1 2 3 4 5 6 7 / 5 4 3 2 7 6 1 0")).unwrap();
        assert_eq!(reduce(&f).pairs, 4);
        let f = omega_matrix(&gp("0 1 2 3 4 / 4 3 2 1 0")).unwrap();
        assert_eq!(reduce(&f).pairs, 2);
    }
}
