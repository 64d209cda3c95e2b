use core::fmt;

use alloc::string::String;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar argument is outside its admissible range.
    InvalidArgument { what: &'static str, value: f64 },
    /// Two nuclei (or Becke centers) sit on the same position.
    CoincidentCenters { first: usize, second: usize },
    /// No embedded Lebedev rule with this many nodes.
    UnsupportedLebedev { requested: usize, supported: &'static [usize] },
    /// No tabulated Bragg–Slater radius for this atomic number.
    UnknownElement { atomic_number: u32 },
    /// Unknown element symbol.
    UnknownSymbol(String),
    /// Cartesian powers exceed the supported angular momentum.
    UnsupportedAngularMomentum { l: u32 },
    /// An operation restricted to s functions received something else.
    NotSType,
    /// Matrix dimensions or symmetry do not match.
    InvalidMatrix(&'static str),
    /// A field returned a non-finite value at a grid point.
    NonFiniteField { index: usize, point: [f64; 3] },
    /// Grid integral of the density differs from the electron count.
    Normalization { integral: f64, expected: f64 },
    /// Rényi order too close to one; use the Shannon routines instead.
    AlphaNearOne { alpha: f64 },
    /// Fractional power of a locally negative same-center density.
    NegativePairDensity { atom: usize, value: f64 },
    /// Fractions supplied to an asymptotic reference do not sum to one.
    InconsistentFractions { sum: f64 },
    /// A quantity that must be finite is not.
    NonFinite(&'static str),
    /// An atom index is out of range.
    AtomIndex { index: usize, n_atoms: usize },
    /// Empty molecule or empty input sequence.
    Empty(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument { what, value } => write!(f, "invalid {what}: {value}"),
            Error::CoincidentCenters { first, second } => {
                write!(f, "centers {first} and {second} coincide")
            }
            Error::UnsupportedLebedev { requested, supported } => {
                write!(f, "unsupported Lebedev grid with {requested} nodes; supported:")?;
                for n in supported.iter() {
                    write!(f, " {n}")?;
                }
                Ok(())
            }
            Error::UnknownElement { atomic_number } => {
                write!(f, "no Bragg-Slater radius for Z = {atomic_number}")
            }
            Error::UnknownSymbol(s) => write!(f, "unknown element symbol '{s}'"),
            Error::UnsupportedAngularMomentum { l } => {
                write!(f, "angular momentum {l} not supported (max 3)")
            }
            Error::NotSType => write!(f, "only s-type contracted functions are supported here"),
            Error::InvalidMatrix(why) => write!(f, "invalid density matrix: {why}"),
            Error::NonFiniteField { index, point } => write!(
                f,
                "non-finite field value at grid point {index} ({}, {}, {})",
                point[0], point[1], point[2]
            ),
            Error::Normalization { integral, expected } => write!(
                f,
                "grid integral of the density is {integral}, expected {expected}; grid inadequate"
            ),
            Error::AlphaNearOne { alpha } => write!(
                f,
                "Rényi order {alpha} is too close to 1; use the Shannon entropy instead"
            ),
            Error::NegativePairDensity { atom, value } => write!(
                f,
                "same-center density of atom {atom} is negative ({value}) and the order is not an integer"
            ),
            Error::InconsistentFractions { sum } => {
                write!(f, "atomic fractions sum to {sum}, expected 1")
            }
            Error::NonFinite(what) => write!(f, "{what} is not finite"),
            Error::AtomIndex { index, n_atoms } => {
                write!(f, "atom index {index} out of range for {n_atoms} atoms")
            }
            Error::Empty(what) => write!(f, "{what} is empty"),
        }
    }
}

impl core::error::Error for Error {}
