//! Exact invariants of polynomial foliations on the complex projective plane.

pub mod classification;
pub mod cli;
pub mod foliation;
pub mod homogeneous;
pub mod numeric;
pub mod polynomial;
pub mod text;
