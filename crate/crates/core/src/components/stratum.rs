use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use crate::surface::{Holonomy, SingularityProfile};
use crate::Error;

/// A stratum `H(d_1, ..., d_n)` or `Q(d_1, ..., d_n, -1^p)`.
///
/// The order of the zero degrees is kept because `d_1` names the singularity
/// wanted at the left endpoint (and for Abelian strata `d_n` the one at the
/// right endpoint). Equality and hashing ignore that order.
#[derive(Clone, Debug)]
pub struct StratumSpec {
    holonomy: Holonomy,
    zeros: Vec<i32>,
    poles: usize,
}

impl StratumSpec {
    pub fn abelian(zeros: Vec<i32>) -> Result<Self, Error> {
        if zeros.iter().any(|&d| d < 1) {
            return Err(Error::InvalidStratum("Abelian degrees must be positive".into()));
        }
        let sum: i32 = zeros.iter().sum();
        if sum < 2 || sum % 2 != 0 {
            return Err(Error::InvalidStratum(format!("degree sum {sum} is not an even number >= 2")));
        }
        Ok(StratumSpec { holonomy: Holonomy::Abelian, zeros, poles: 0 })
    }

    pub fn quadratic(zeros: Vec<i32>, poles: usize) -> Result<Self, Error> {
        if zeros.iter().any(|&d| d < 1) {
            return Err(Error::InvalidStratum("zero degrees must be positive".into()));
        }
        let total = zeros.iter().sum::<i32>() - poles as i32;
        if total < -4 || total % 4 != 0 {
            return Err(Error::InvalidStratum(format!("degree sum {total} is not 4g-4")));
        }
        Ok(StratumSpec { holonomy: Holonomy::Quadratic, zeros, poles })
    }

    /// The stratum of a profile, zeros in decreasing order. Fails on marked points.
    pub fn from_profile(p: &SingularityProfile) -> Result<Self, Error> {
        if p.is_degenerate() {
            return Err(Error::DegenerateInput);
        }
        let zeros: Vec<i32> = p.degrees.iter().copied().filter(|&d| d > 0).collect();
        let poles = p.degrees.iter().filter(|&&d| d == -1).count();
        match p.holonomy {
            Holonomy::Abelian => Self::abelian(zeros),
            Holonomy::Quadratic => Self::quadratic(zeros, poles),
        }
    }

    pub fn holonomy(&self) -> Holonomy {
        self.holonomy
    }

    /// Zero degrees in the order given.
    pub fn zeros(&self) -> &[i32] {
        &self.zeros
    }

    pub fn poles(&self) -> usize {
        self.poles
    }

    pub fn genus(&self) -> u32 {
        let sum: i32 = self.zeros.iter().sum();
        match self.holonomy {
            Holonomy::Abelian => (sum / 2 + 1) as u32,
            Holonomy::Quadratic => ((sum - self.poles as i32) / 4 + 1) as u32,
        }
    }

    /// All degrees, poles included, in decreasing order.
    pub fn sorted_degrees(&self) -> Vec<i32> {
        let mut d = self.zeros.clone();
        d.extend(core::iter::repeat(-1).take(self.poles));
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The degree expected at the left endpoint.
    pub fn left_degree(&self) -> i32 {
        self.zeros.first().copied().unwrap_or(-1)
    }

    /// The degree expected at the right endpoint (Abelian only).
    pub fn right_degree(&self) -> Option<i32> {
        match self.holonomy {
            Holonomy::Abelian => self.zeros.last().copied(),
            Holonomy::Quadratic => None,
        }
    }

    /// Whether a profile lies in this stratum.
    pub fn matches(&self, p: &SingularityProfile) -> bool {
        p.holonomy == self.holonomy && !p.is_degenerate() && p.degrees == self.sorted_degrees()
    }

    /// Puts the zero degrees in decreasing order.
    pub fn sort_zeros(&mut self) {
        self.zeros.sort_unstable_by(|a, b| b.cmp(a));
    }

    /// The stratum once for each distinct choice of the first zero degree
    /// and, for Abelian strata, of the last one.
    pub fn endpoint_variants(&self) -> Vec<Self> {
        let mut distinct = self.zeros.clone();
        distinct.sort_unstable_by(|a, b| b.cmp(a));
        distinct.dedup();
        let mut out = Vec::new();
        for &d in &distinct {
            let front = self.with_first(d).expect("d is a zero degree");
            if self.holonomy == Holonomy::Quadratic || front.zeros.len() < 2 {
                out.push(front);
                continue;
            }
            let mut tail = front.zeros[1..].to_vec();
            tail.sort_unstable_by(|a, b| b.cmp(a));
            tail.dedup();
            for &e in &tail {
                let mut z = front.zeros[1..].to_vec();
                let i = z.iter().position(|&x| x == e).expect("e is in the tail");
                z.remove(i);
                z.insert(0, d);
                z.push(e);
                out.push(StratumSpec { zeros: z, ..self.clone() });
            }
        }
        if out.is_empty() {
            out.push(self.clone());
        }
        out
    }

    /// Reorders the zeros so that `left` comes first and, for Abelian
    /// strata, `right` comes last. Degrees that are not zeros are ignored.
    pub fn with_endpoints(&self, left: i32, right: Option<i32>) -> Self {
        let mut rest = self.zeros.clone();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let mut take = |d: i32| rest.iter().position(|&x| x == d).map(|i| rest.remove(i));
        let front = take(left);
        let back = match self.holonomy {
            Holonomy::Abelian => right.and_then(&mut take),
            Holonomy::Quadratic => None,
        };
        let zeros = front.into_iter().chain(rest).chain(back).collect();
        StratumSpec { zeros, ..self.clone() }
    }

    /// The same stratum with `d` moved to the front, if `d` is a zero degree.
    pub fn with_first(&self, d: i32) -> Option<Self> {
        let i = self.zeros.iter().position(|&x| x == d)?;
        let mut s = self.clone();
        let v = s.zeros.remove(i);
        s.zeros.insert(0, v);
        Some(s)
    }
}

/// Partitions of `n` into parts of size at most `max`, decreasing.
fn partitions(n: i32, max: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every stratum, empty ones included, whose degrees have total absolute
/// value at most `bound`. Zeros come in decreasing order.
pub fn strata_up_to(bound: i32) -> Vec<StratumSpec> {
    let mut out = Vec::new();
    for n in (2..=bound).step_by(2) {
        for z in partitions(n, n) {
            out.push(StratumSpec::abelian(z).expect("even positive sum"));
        }
    }
    for poles in 0..=bound {
        for n in 0..=bound - poles {
            for z in partitions(n, n) {
                if let Ok(s) = StratumSpec::quadratic(z, poles as usize) {
                    out.push(s);
                }
            }
        }
    }
    out
}

impl PartialEq for StratumSpec {
    fn eq(&self, other: &Self) -> bool {
        self.holonomy == other.holonomy && self.sorted_degrees() == other.sorted_degrees()
    }
}

impl Eq for StratumSpec {}

impl Hash for StratumSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.holonomy.hash(state);
        self.sorted_degrees().hash(state);
    }
}

impl fmt::Display for StratumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.zeros.iter().map(|d| format!("{d}")).collect();
        match self.poles {
            0 => {}
            1 => parts.push("-1".into()),
            p => parts.push(format!("-1^{p}")),
        }
        let head = match self.holonomy {
            Holonomy::Abelian => "H",
            Holonomy::Quadratic => "Q",
        };
        write!(f, "{head}({})", parts.join(","))
    }
}

/// Which component of a stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentLabel {
    Connected,
    Hyperelliptic,
    NonHyperelliptic,
    EvenSpin,
    OddSpin,
    Irr,
    Reg,
}

impl ComponentLabel {
    /// Suffix used in component specs; empty for `Connected`.
    pub fn suffix(self) -> &'static str {
        match self {
            ComponentLabel::Connected => "",
            ComponentLabel::Hyperelliptic => "hyp",
            ComponentLabel::NonHyperelliptic => "nonhyp",
            ComponentLabel::EvenSpin => "even",
            ComponentLabel::OddSpin => "odd",
            ComponentLabel::Irr => "irr",
            ComponentLabel::Reg => "reg",
        }
    }

    pub fn from_suffix(s: &str) -> Option<Self> {
        Some(match s {
            "hyp" => ComponentLabel::Hyperelliptic,
            "nonhyp" => ComponentLabel::NonHyperelliptic,
            "even" => ComponentLabel::EvenSpin,
            "odd" => ComponentLabel::OddSpin,
            "irr" => ComponentLabel::Irr,
            "reg" => ComponentLabel::Reg,
            _ => return None,
        })
    }
}

/// A connected component: a stratum and a label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentId {
    pub stratum: StratumSpec,
    pub label: ComponentLabel,
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.stratum)?;
        match self.label {
            ComponentLabel::Connected => Ok(()),
            l => write!(f, ":{}", l.suffix()),
        }
    }
}

/// Parses `H(2,1^2)`, `Q(3,3,-1^2):hyp` and the like. The label is `None`
/// when no suffix is given.
pub fn parse_component(text: &str) -> Result<(StratumSpec, Option<ComponentLabel>), Error> {
    let bad = |m: &str| Error::InvalidStratum(format!("{m}: {text:?}"));
    let squeezed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, label) = match squeezed.split_once(':') {
        Some((b, l)) => (b, Some(ComponentLabel::from_suffix(l).ok_or_else(|| bad("unknown label"))?)),
        None => (squeezed.as_str(), None),
    };
    let holonomy = match body.chars().next() {
        Some('H') => Holonomy::Abelian,
        Some('Q') => Holonomy::Quadratic,
        _ => return Err(bad("expected H(...) or Q(...)")),
    };
    let inner = body[1..]
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| bad("missing parentheses"))?;
    let mut degrees = Vec::new();
    if !inner.is_empty() {
        for entry in inner.split(',') {
            let (value, times) = match entry.split_once('^') {
                Some((v, k)) => (v, k.parse::<usize>().map_err(|_| bad("bad exponent"))?),
                None => (entry, 1),
            };
            let d: i32 = value.parse().map_err(|_| bad("bad degree"))?;
            degrees.extend(core::iter::repeat(d).take(times));
        }
    }
    let zeros: Vec<i32> = degrees.iter().copied().filter(|&d| d != -1).collect();
    let poles = degrees.len() - zeros.len();
    let spec = match holonomy {
        Holonomy::Abelian if poles > 0 => return Err(bad("Abelian strata have no poles")),
        Holonomy::Abelian => StratumSpec::abelian(zeros)?,
        Holonomy::Quadratic => StratumSpec::quadratic(zeros, poles)?,
    };
    Ok((spec, label))
}

impl FromStr for StratumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match parse_component(s)? {
            (spec, None) => Ok(spec),
            (_, Some(_)) => Err(Error::InvalidStratum(format!("unexpected label in {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn grammar() {
        let (s, l) = parse_component("Q(3, 3, -1^2):hyp").unwrap();
        assert_eq!(s, StratumSpec::quadratic(vec![3, 3], 2).unwrap());
        assert_eq!(l, Some(ComponentLabel::Hyperelliptic));
        let (s, l) = parse_component("H(1^4)").unwrap();
        assert_eq!(s.zeros(), &[1, 1, 1, 1]);
        assert_eq!(s.genus(), 3);
        assert_eq!(l, None);
        assert_eq!(parse_component("Q()").unwrap().0.genus(), 1);
        assert_eq!("Q(-1^4)".parse::<StratumSpec>().unwrap().genus(), 0);
        for bad in ["H(3)", "H(2,-1)", "Q(2)", "X(2)", "H(2):odd:hyp", "H(2):weird", "H 2", "Q(0,-1^4)"] {
            assert!(parse_component(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_and_equality() {
        let s: StratumSpec = "Q(3,6,-1)".parse().unwrap();
        assert_eq!(s.to_string(), "Q(3,6,-1)");
        assert_eq!(s, "Q(6,3,-1)".parse().unwrap());
        assert_eq!(s.left_degree(), 3);
        assert_eq!(s.sorted_degrees(), vec![6, 3, -1]);
        assert_eq!("Q(1,1,-1^2)".parse::<StratumSpec>().unwrap().to_string(), "Q(1,1,-1^2)");
        let c = ComponentId { stratum: "H(4)".parse().unwrap(), label: ComponentLabel::OddSpin };
        assert_eq!(c.to_string(), "H(4):odd");
    }

    #[test]
    fn enumeration() {
        let all = strata_up_to(4);
        let text: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        for s in ["H(2)", "H(1,1)", "H(4)", "H(1,1,1,1)", "Q()", "Q(4)", "Q(-1^4)", "Q(2,-1^2)"] {
            assert!(text.iter().any(|t| t == s), "{s}");
        }
        assert!(!text.iter().any(|t| t == "Q(1,-1^4)"));
        let ends: Vec<String> = "H(2,1,1)".parse::<StratumSpec>().unwrap().endpoint_variants().iter().map(|s| s.to_string()).collect();
        assert_eq!(ends, ["H(2,1,1)", "H(1,1,2)", "H(1,2,1)"]);
        assert_eq!("Q(2,1,-1^3)".parse::<StratumSpec>().unwrap().endpoint_variants().len(), 2);
        assert_eq!("Q(-1^4)".parse::<StratumSpec>().unwrap().endpoint_variants().len(), 1);
        let s: StratumSpec = "H(2,1,1)".parse().unwrap();
        assert_eq!(s.with_endpoints(1, Some(1)).to_string(), "H(1,2,1)");
        assert_eq!(s.with_endpoints(2, Some(1)).to_string(), "H(2,1,1)");
        assert_eq!("H(2)".parse::<StratumSpec>().unwrap().with_endpoints(2, Some(2)).to_string(), "H(2)");
        assert_eq!("Q(2,1,-1^3)".parse::<StratumSpec>().unwrap().with_endpoints(-1, None).to_string(), "Q(2,1,-1^3)");
    }
}
