//! Exact arithmetic: cyclotomic scalars, dense matrices and polynomials
//! over them.

mod cyclotomic;
mod matrix;
mod poly;

pub use cyclotomic::{cyc_eq, cyclotomic_polynomial, totient, Cyclotomic};
pub use matrix::ExactMatrix;
pub use poly::Poly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("malformed rational: zero denominator")]
    MalformedRational,
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    Inconsistent,
}
