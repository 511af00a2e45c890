//! Walsh and differential analysis of vectorial Boolean functions on
//! GF(2^n), n = 2m, with the maximal number 2^n - 2^m of bent components,
//! centred on the family F(x) = x^(2^r) * Tr(L(x)) for linearized
//! permutations L of GF(2^m).

pub mod certify;
pub mod differential;
pub mod error;
pub mod family;
pub mod field;
pub mod linpoly;
pub mod survey;
pub mod walsh;

pub use error::{Error, Result};
