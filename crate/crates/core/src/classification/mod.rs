//! Invariant lines, reduced convexity, degeneration to homogeneous foliations along an
//! invariant line, and the verification suites for the degree-four classification.

mod degenerate;
mod lines;
mod report;
mod table;
mod theorems;

pub use degenerate::{degenerate_along_line, DegenerationChecks, DegenerationPoint, DegenerationResult};
pub use lines::{invariant_lines, reduced_convex_report, LineInventory, ReducedConvexReport};
pub use report::{Check, Report};
pub use table::{classify_convex, cs_coefficients, table1, ClassMatch, TableRow};
pub use theorems::{
    degenerations,    hesse_closing_identity, omega4_pullback_identity, omega5_pullback_identity, table_fields,
    verify_theorem_a, verify_theorem_b_support,
};

use thiserror::Error;

use crate::foliation::FoliationError;
use crate::homogeneous::HomError;
use crate::polynomial::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("line {0} is not invariant")]
    NotInvariant(String),
    #[error("the top graded parts share the factor {0}")]
    CommonFactorInTopPart(String),
    #[error("incomplete data: {0}")]
    IncompleteData(String),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Foliation(#[from] FoliationError),
}

impl From<PolyError> for ClassError {
    fn from(e: PolyError) -> Self {
        ClassError::Foliation(e.into())
    }
}

impl From<crate::numeric::NumericError> for ClassError {
    fn from(e: crate::numeric::NumericError) -> Self {
        ClassError::Foliation(e.into())
    }
}
