//! Exact arithmetic over the rationals and simple number fields `Q(t)`.

mod algnum;
mod field;
mod modular;
pub mod qpoly;
pub mod rational;

pub use algnum::AlgNum;
pub use field::{Irreducibility, NumberField};
pub use qpoly::QPoly;
pub use rational::{rat, ratio, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("minimal polynomial is not monic")]
    NonMonic,
    #[error("minimal polynomial must have degree at least 1")]
    ConstantMinimalPolynomial,
    #[error("minimal polynomial has the rational root {0}")]
    ReducibleAtSmallDegree(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible (minimal polynomial is reducible)")]
    NotInvertible,
    #[error("elements of {0} and {1} cannot be combined")]
    FieldMismatch(String, String),
    #[error("proposed generator image is not a root of the minimal polynomial")]
    NotARoot,
}

#[cfg(test)]
mod tests;
