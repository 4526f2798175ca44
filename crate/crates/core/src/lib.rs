//! Generalized permutations, Rauzy classes and connected components of strata
//! of Abelian and quadratic differentials.
//!
//! Everything here is `no_std` with `alloc`. File formats, the command line
//! and parallel enumeration live in the `gprc` crate.
#![no_std]

extern crate alloc;

mod error;
pub mod components;
pub mod genperm;
pub mod lp;
pub mod rauzy;
pub mod spin;
pub mod surface;

pub use error::Error;
pub use genperm::{CylinderDiagram, Diagonal, GeneralizedPermutation, Line, Symbol};
pub use rauzy::{ClassHandle, ClassKind, Undefined, Word};
pub use surface::{Holonomy, SingularityProfile, SuspensionData};
