//! JSON shapes printed by the command line.

use gprc_core::components::{ComponentId, StratumSpec};
use gprc_core::surface::{Holonomy, SingularityProfile};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub holonomy: String,
    /// Decreasing; poles are `-1`, marked points `0`.
    pub degrees: Vec<i32>,
    pub genus: u32,
    pub left_degree: i32,
    pub right_degree: Option<i32>,
    pub marked_points: usize,
    /// `H(...)` or `Q(...)`; absent when there are marked points.
    pub stratum: Option<String>,
}

pub fn holonomy_name(h: Holonomy) -> &'static str {
    match h {
        Holonomy::Abelian => "abelian",
        Holonomy::Quadratic => "quadratic",
    }
}

impl From<&SingularityProfile> for Profile {
    fn from(p: &SingularityProfile) -> Self {
        Profile {
            holonomy: holonomy_name(p.holonomy).into(),
            degrees: p.degrees.clone(),
            genus: p.genus,
            left_degree: p.left_degree,
            right_degree: p.right_degree,
            marked_points: p.marked_points,
            stratum: StratumSpec::from_profile(p).ok().map(|s| s.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub component: String,
    pub stratum: String,
    /// Empty for a connected stratum.
    pub label: String,
}

impl From<&ComponentId> for Component {
    fn from(c: &ComponentId) -> Self {
        Component { component: c.to_string(), stratum: c.stratum.to_string(), label: c.label.suffix().into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub component: String,
    pub permutation: String,
    pub profile: Profile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Class {
    pub kind: String,
    pub seed: String,
    pub count: usize,
    pub file: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub kind: String,
    pub seed: String,
    pub target: String,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spin {
    pub permutation: String,
    pub parity: u8,
    /// Orthogonal pairs found by the reduction, i.e. the genus.
    pub pairs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    pub permutation: String,
    pub profile: Option<Profile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub error: String,
    pub exit_code: i32,
}
