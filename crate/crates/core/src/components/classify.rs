use hashbrown::{HashMap, HashSet};

use super::reps::representative;
use super::stratum::{ComponentId, ComponentLabel, StratumSpec};
use super::{hyp_spin_parity_closed_form, labels_of};
use crate::genperm::GeneralizedPermutation;
use crate::rauzy::{self, ClassKind, Word};
use crate::spin::spin_parity;
use crate::surface::{stratum_of, Holonomy};
use crate::Error;

/// Enumerates the class of an irreducible word.
pub type Enumerator = fn(&Word, ClassKind) -> HashSet<Word>;

/// Assigns permutations to components.
///
/// Components that no invariant separates are told apart by membership in
/// the extended class of a reference component: the hyperelliptic one, or
/// the irregular one for the exceptional strata. Both are the smaller class
/// of their stratum. Reference classes are kept for reuse.
pub struct Classifier {
    enumerate: Enumerator,
    reference: HashMap<ComponentId, HashSet<Word>>,
}

impl Default for Classifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Classifier {
    pub fn new() -> Self {
        Self::with_enumerator(rauzy::enumerate)
    }

    pub fn with_enumerator(enumerate: Enumerator) -> Self {
        Classifier { enumerate, reference: HashMap::new() }
    }

    fn in_reference(&mut self, stratum: &StratumSpec, label: ComponentLabel, p: &GeneralizedPermutation) -> Result<bool, Error> {
        let id = ComponentId { stratum: stratum.clone(), label };
        if !self.reference.contains_key(&id) {
            let seed = Word::from_perm(&representative(&id)?)?;
            let class = (self.enumerate)(&seed, ClassKind::Extended);
            self.reference.insert(id.clone(), class);
        }
        Ok(self.reference[&id].contains(&Word::from_perm(p)?))
    }

    pub fn classify(&mut self, p: &GeneralizedPermutation) -> Result<ComponentId, Error> {
        use ComponentLabel::*;
        if !rauzy::is_irreducible(p) {
            return Err(Error::Reducible);
        }
        let profile = stratum_of(p)?;
        let stratum = StratumSpec::from_profile(&profile)?;
        let labels = labels_of(&stratum);
        let label = match labels.as_slice() {
            [] => return Err(Error::EmptyStratum),
            [only] => *only,
            _ => match stratum.holonomy() {
                Holonomy::Abelian if stratum.zeros()[0] % 2 == 0 => {
                    let parity = spin_parity(p)?;
                    let spin = if parity == 1 { OddSpin } else { EvenSpin };
                    let could_be_hyp = labels.contains(&Hyperelliptic)
                        && hyp_spin_parity_closed_form(&stratum) == Ok(parity);
                    if !could_be_hyp {
                        spin
                    } else if !labels.contains(&spin) || self.in_reference(&stratum, Hyperelliptic, p)? {
                        Hyperelliptic
                    } else {
                        spin
                    }
                }
                _ if labels.contains(&Irr) => {
                    if self.in_reference(&stratum, Irr, p)? {
                        Irr
                    } else {
                        Reg
                    }
                }
                _ => {
                    if self.in_reference(&stratum, Hyperelliptic, p)? {
                        Hyperelliptic
                    } else {
                        NonHyperelliptic
                    }
                }
            },
        };
        // Report the zeros in endpoint order: left first, right last.
        let stratum = stratum.with_endpoints(profile.left_degree, profile.right_degree);
        Ok(ComponentId { stratum, label })
    }
}

/// One-off classification; see [`Classifier`] to reuse reference classes.
pub fn classify(p: &GeneralizedPermutation) -> Result<ComponentId, Error> {
    Classifier::new().classify(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn gp(s: &str) -> GeneralizedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let mut c = Classifier::new();
        assert_eq!(c.classify(&gp("0 1 2 3 4 5 / 3 2 5 4 1 0")).unwrap().to_string(), "H(4):odd");
        assert_eq!(c.classify(&gp("0 1 2 3 4 5 / 5 4 3 2 1 0")).unwrap().to_string(), "H(4):hyp");
        assert_eq!(c.classify(&gp("0 1 2 1 3 / 4 3 4 2 0")).unwrap().to_string(), "Q(2,2)");
        assert_eq!(c.classify(&gp("0 1 2 1 2 3 3 4 / 5 6 5 6 4 0")).unwrap().to_string(), "Q(9,-1):reg");
        assert_eq!(c.classify(&gp("0 1 2 3 4 5 6 / 4 3 2 6 5 1 0")).unwrap().to_string(), "H(1,3)");
        assert_eq!(c.classify(&gp("0 1 2 3 / 1 0 3 2")), Err(Error::Reducible));
        assert_eq!(c.classify(&gp("0 1 2 / 2 1 0")), Err(Error::DegenerateInput));
    }
}
