//! Sparse multivariate polynomials over a number field and the elimination toolkit built on them.

mod affine;
mod divisor;
mod factor;
pub mod gcd;
mod mpoly;
mod resultant;
pub mod roots;
mod univariate;

pub use affine::AffineMap;
pub use divisor::Divisor;
pub use factor::{linear_factors, squarefree_decompose, LinearFactorization};
pub use gcd::gcd;
pub use mpoly::{MPoly, Monomial};
pub use resultant::{determinant, resultant, resultant_at};
pub use roots::{roots_in_field, RootSet};
pub use univariate::UPoly;

use thiserror::Error;

use crate::numeric::NumericError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials over {0} and {1} cannot be combined")]
    FieldMismatch(String, String),
    #[error("variable sets differ: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("unknown variable {0}")]
    UnknownVariable(char),
    #[error("expected {0} components, got {1}")]
    ArityMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("not divisible")]
    NotDivisible,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial involves more than one variable")]
    NotUnivariate,
    #[error("target degree {0} is below the degree {1}")]
    DegreeTooSmall(u32, u32),
    #[error("the map is not invertible")]
    SingularMap,
    #[error(transparent)]
    Numeric(#[from] NumericError),
}
