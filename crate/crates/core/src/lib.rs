//! Normal integral bases of the simplest cubic fields.
//!
//! For an integer `n`, the simplest cubic field `L_n = Q(ρ)` is generated by a
//! root `ρ` of Shanks' polynomial `X^3 - nX^2 - (n+3)X - 1`. This crate computes
//! the field invariants of `L_n`, builds an integral basis, constructs all six
//! generators of normal integral bases when `L_n/Q` is tamely ramified, and
//! identifies the Gaussian periods of `L_n` with signed generators. Every
//! construction is checked against an independent oracle: trace-form
//! discriminants for the algebra, and multi-precision period sums for the
//! Gaussian periods.
//!
//! All algebraic computations are exact (`BigInt` / `BigRational`); floating
//! point only appears in the [`numeric`] module, which works in fixed-point
//! big-integer arithmetic with explicit precision.

pub mod arith;
pub mod cubic_field;
pub mod eisenstein;
mod error;
pub mod gaussian;
pub mod integral_basis;
pub mod invariants;
pub mod nib;
pub mod numeric;
pub mod par;
pub mod render;
pub mod table;

pub use cubic_field::{FieldElement, MonicCubic};
pub use eisenstein::{EisensteinInt, Pair, PairSet};
pub use error::{Error, Result};
pub use invariants::{DeltaDecomposition, FieldInvariants};
pub use nib::NibGenerator;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an exact rational.
pub type Rational = BigRational;

pub(crate) fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub(crate) fn rat(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}
