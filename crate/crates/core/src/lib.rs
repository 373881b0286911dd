//! Exact skein-theoretic evaluation of the quantum G₂ and A₁ brackets,
//! confluence checking of the G₂ face rules, representation-theoretic
//! dimension oracles and the combinatorics behind them.

pub mod acceptance;
pub mod confluence;
pub mod enumerate;
pub mod error;
pub mod planar;
pub mod qscalar;
pub mod repdim;
pub mod skein;

pub use error::{Error, Result};
pub use qscalar::{quantum_int, Exponent, LaurentPoly, Scalar};
