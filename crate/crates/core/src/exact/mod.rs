//! Exact arithmetic and exact linear algebra.
//!
//! Everything downstream (chain complexes, homology, splitting matrices)
//! runs on the types in this module: arbitrary-precision rationals,
//! Laurent polynomials in `q`, the fraction field `k(q)`, and dense
//! matrices over either field. No floating point anywhere.

mod laurent;
mod matrix;
mod ratfunc;

pub use laurent::Laurent;
pub use matrix::{Matrix, QMatrix, QVector};
pub use ratfunc::{rational_fn_divide, RatFunc};

use thiserror::Error;

/// Arbitrary-precision rational number, the coefficient field for homology.
pub type Rat = num_rational::BigRational;
pub type Int = num_bigint::BigInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Exact field operations, implemented by `Rat` and `RatFunc`.
///
/// Matrix routines are generic over this trait so that rank/kernel/inverse
/// code is written once and shared between Q and k(q).
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, AlgebraError>;

    fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }
}

impl Field for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if Field::is_zero(self) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
