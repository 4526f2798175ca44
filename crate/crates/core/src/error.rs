use alloc::string::String;
use core::fmt;

use crate::genperm::Symbol;

/// Errors raised by the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Text or word input does not describe a generalized permutation.
    MalformedInput(String),
    /// An erasure would leave one of the lines empty.
    EmptyLine,
    /// A symbol named by the caller does not occur in the permutation.
    UnknownSymbol(Symbol),
    /// The permutation is not cylindrical.
    NotCylindrical,
    /// A basepoint index lies outside its cyclic word.
    IndexOutOfRange,
    /// No suspension data exists for the permutation.
    NotSuspendable,
    /// A cone angle could not be rounded to a multiple of pi.
    RoundingUnstable,
    /// A cylinder diagram admits no positive lengths.
    LengthInfeasible,
    /// The permutation (or seed) is reducible.
    Reducible,
    /// The operation needs a true permutation.
    NotTruePermutation,
    /// Spin parity needs all degrees even.
    OddDegrees,
    /// The suspension has marked points.
    DegenerateInput,
    /// The degree list violates the stratum sum relations.
    InvalidStratum(String),
    /// The stratum is empty.
    EmptyStratum,
    /// The requested component does not exist in the stratum.
    NoSuchComponent,
    /// The label is never valid for this kind of stratum.
    UnsupportedLabel,
    /// The closed form does not apply to this stratum.
    NotApplicable,
    /// Alphabet too large for the compact encoding (at most 127 symbols).
    AlphabetTooLarge,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedInput(msg) => write!(f, "malformed input: {msg}"),
            Error::EmptyLine => f.write_str("erasure would empty a line"),
            Error::UnknownSymbol(s) => write!(f, "unknown symbol {s}"),
            Error::NotCylindrical => f.write_str("permutation is not cylindrical"),
            Error::IndexOutOfRange => f.write_str("basepoint index out of range"),
            Error::NotSuspendable => f.write_str("no suspension data (permutation is reducible)"),
            Error::RoundingUnstable => f.write_str("cone angle is not close to a multiple of pi"),
            Error::LengthInfeasible => f.write_str("no positive lengths satisfy the diagram"),
            Error::Reducible => f.write_str("permutation is reducible"),
            Error::NotTruePermutation => f.write_str("not a true permutation"),
            Error::OddDegrees => f.write_str("stratum has odd degrees"),
            Error::DegenerateInput => f.write_str("permutation is degenerate (marked points)"),
            Error::InvalidStratum(msg) => write!(f, "invalid stratum: {msg}"),
            Error::EmptyStratum => f.write_str("stratum is empty"),
            Error::NoSuchComponent => f.write_str("no such component in this stratum"),
            Error::UnsupportedLabel => f.write_str("label not supported for this stratum"),
            Error::NotApplicable => f.write_str("closed form not applicable"),
            Error::AlphabetTooLarge => f.write_str("alphabet exceeds 127 symbols"),
        }
    }
}

impl core::error::Error for Error {}
