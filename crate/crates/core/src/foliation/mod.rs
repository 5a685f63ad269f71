//! Foliations of the projective plane: construction, singular points, local invariants,
//! inflection curves and invariant lines.

mod form;
mod inflection;
mod local;
mod milnor;
mod point;
mod singular;

pub use form::{make_foliation, make_foliation_with_case, InfinityCase, ProjFoliation};
pub(crate) use form::larger_field;
pub use inflection::{
    affine_inflection, inflection_divisor, inflection_polynomial, is_convex, is_invariant_curve,
    is_invariant_line, wedge_with_differential, InflectionDecomposition,
};
pub use local::{
    local_invariants, local_vector_field, tangency_order, LineIndex, LocalData, LocalVectorField,
    Matrix2, UV,
};
pub use milnor::{jacobian_nonzero, milnor_number};
pub use point::{Chart, Line, ProjPoint};
pub use singular::{singular_points, SingularLocus};

use thiserror::Error;

use crate::polynomial::PolyError;

/// Homogeneous coordinates.
pub const XYZ: [char; 3] = ['x', 'y', 'z'];
/// Coordinates of the chart `z = 1`.
pub const XY: [char; 2] = ['x', 'y'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoliationError {
    #[error("the form is zero")]
    ZeroForm,
    #[error("the coefficients share the factor {0}")]
    CommonFactor(String),
    #[error("coefficients are not homogeneous of one common positive degree")]
    NotHomogeneous,
    #[error("x a + y b + z c is not zero")]
    EulerViolated,
    #[error("coefficients over {0} and {1} cannot be combined")]
    FieldMismatch(String, String),
    #[error("all coordinates are zero")]
    ZeroVector,
    #[error("{0} is not a line")]
    NotALine(String),
    #[error("{0} is not a singular point")]
    NotSingular(String),
    #[error("line {0} does not pass through {1}")]
    LineMissesPoint(String, String),
    #[error("line {0} is not invariant")]
    NotInvariantLine(String),
    #[error("no tangency order up to the degree {0}")]
    TauExceedsDegree(u32),
    #[error("the eigenvalue along {0} is zero")]
    ZeroEigenvalueAlongLine(String),
    #[error("the singular point is not isolated")]
    NonIsolated,
    #[error("expected polynomials in two variables")]
    NotPlanar,
    #[error("every leaf is a line")]
    EveryLeafIsLinear,
    #[error("inflection polynomial has degree {0}, above {1}")]
    InflectionDegree(u32, u32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<crate::numeric::NumericError> for FoliationError {
    fn from(e: crate::numeric::NumericError) -> Self {
        FoliationError::Poly(PolyError::Numeric(e))
    }
}

#[cfg(test)]
mod tests;
