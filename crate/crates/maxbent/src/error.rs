use std::fmt;

/// Errors surfaced by the analysis operations.
///
/// Internal-consistency failures (reduction mismatches, coset
/// inconsistencies, subspace-closure violations) indicate a bug in a
/// construction and are never silently swallowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A modulus candidate is not irreducible or not primitive.
    BadModulus {
        k: u32,
        modulus: u32,
        reason: &'static str,
    },
    /// The zero component is excluded from all component-function censuses.
    ZeroComponent,
    /// Differential counts require a nonzero difference direction.
    ZeroDirection,
    /// The derivative map of the input is not GF(2)-linear.
    NotQuadratic,
    /// A linearized polynomial that had to be a permutation is not one.
    NotPermutation(String),
    /// beta lies in the image of x^(2^(2r)-1), so the binomial is singular.
    BetaInPowerImage {
        beta: u32,
        power: u64,
    },
    /// delta exponents are not constant on a relative-trace coset.
    CosetInconsistency {
        z: u32,
    },
    /// The non-bent set of a function with the maximal bent count is not
    /// closed under addition.
    SubspaceClosure,
    /// A dual-computation cross-check disagreed.
    ReductionMismatch(String),
    /// CLI / config syntax problems.
    Parse(String),
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadModulus { k, modulus, reason } => {
                write!(f, "modulus {modulus:#x} for GF(2^{k}) rejected: {reason}")
            }
            Error::ZeroComponent => write!(f, "component index v = 0 is excluded"),
            Error::ZeroDirection => write!(f, "difference direction a = 0 is excluded"),
            Error::NotQuadratic => write!(f, "derivative map is not GF(2)-linear"),
            Error::NotPermutation(s) => write!(f, "not a permutation: {s}"),
            Error::BetaInPowerImage { beta, power } => {
                write!(
                    f,
                    "beta {beta:#x} is a {power}-th power, binomial map is singular"
                )
            }
            Error::CosetInconsistency { z } => {
                write!(f, "delta exponent not constant on the coset of z = {z:#x}")
            }
            Error::SubspaceClosure => {
                write!(f, "non-bent set plus zero is not closed under addition")
            }
            Error::ReductionMismatch(s) => write!(f, "reduction cross-check failed: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::Io(s) => write!(f, "io error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
