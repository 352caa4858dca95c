//! Exact coefficient arithmetic in the variable `q`.
//!
//! Two layers: [`LaurentPoly`] is the ring of integer Laurent polynomials
//! Z[q, q^-1], and [`RatFunc`] is the fraction field Q(q) in which every
//! algebra coefficient of this crate lives. Both carry the bar involution
//! q -> q^-1. Canonical forms are unique, so `==` is structural equality.

mod laurent;
mod poly;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Errors raised by coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("pole: denominator vanishes at the evaluation point")]
    Pole,
}

/// Shorthand for an exact rational number.
pub type Rational = BigRational;

pub(crate) fn big(i: i64) -> BigInt {
    BigInt::from(i)
}
