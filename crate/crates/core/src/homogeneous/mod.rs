//! Homogeneous foliations `A dx + B dy` with `A`, `B` forms of equal degree: tangent cone,
//! discriminant, type, the self-map of the line at infinity and the named catalog.

mod catalog;
mod gmap;
mod infinity;
mod kind;

pub use catalog::{catalog, catalog_by_name, CatalogEntry, CatalogName};
pub use gmap::{gmap, gmap_analysis, gmap_coherence, GmapAnalysis, GmapCoherence, RationalSelfMap, SpherePoint};
pub use infinity::{
    cs_polynomial, infinity_tangency, points_at_infinity, tangency_divisor_check, InfinityGroup,
    TangencyDivisorCheck, LAMBDA,
};
pub use kind::{hom_type, HomType};

use thiserror::Error;

use crate::foliation::{make_foliation, FoliationError, ProjFoliation, XY};
use crate::numeric::NumberField;
use crate::polynomial::{gcd, MPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("A and B must be homogeneous of one common degree")]
    NotHomogeneous,
    #[error("degree {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("A and B share the factor {0}")]
    CommonFactor(String),
    #[error("the discriminant vanishes identically")]
    DegenerateDiscriminant,
    #[error("{0} has no linear factor over the field")]
    FactorOutsideField(String),
    #[error("the points at infinity are roots of {0}, which does not split over the field")]
    RootOutsideField(String),
    #[error("unknown catalog name {0}")]
    UnknownName(String),
    #[error("bad parameters for {0}")]
    BadParams(String),
    #[error(transparent)]
    Foliation(#[from] FoliationError),
}

impl From<PolyError> for HomError {
    fn from(e: PolyError) -> Self {
        HomError::Foliation(FoliationError::Poly(e))
    }
}

impl From<crate::numeric::NumericError> for HomError {
    fn from(e: crate::numeric::NumericError) -> Self {
        HomError::Foliation(e.into())
    }
}

/// A foliation `A dx + B dy` of degree `d >= 2` with `A`, `B` coprime forms of degree `d` in `x, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFoliation {
    a: MPoly,
    b: MPoly,
    degree: u32,
}

impl HomFoliation {
    pub fn new(a: MPoly, b: MPoly) -> Result<Self, HomError> {
        let a = a.with_vars(&XY).map_err(|_| FoliationError::NotPlanar)?;
        let b = b.with_vars(&XY).map_err(|_| FoliationError::NotPlanar)?;
        let field = crate::foliation::larger_field(a.field(), b.field())?;
        let (a, b) = (a.promote(&field)?, b.promote(&field)?);
        if a.is_zero() && b.is_zero() {
            return Err(FoliationError::ZeroForm.into());
        }
        let degree = match (a.total_degree(), b.total_degree()) {
            (Some(p), Some(q)) if p == q => p,
            (Some(p), None) | (None, Some(p)) => p,
            _ => return Err(HomError::NotHomogeneous),
        };
        if !a.is_homogeneous() || !b.is_homogeneous() {
            return Err(HomError::NotHomogeneous);
        }
        if degree < 2 {
            return Err(HomError::DegreeTooSmall(degree));
        }
        let g = gcd(&a, &b);
        if !g.is_constant() {
            return Err(HomError::CommonFactor(g.normalize().to_string()));
        }
        Ok(HomFoliation { a, b, degree })
    }

    pub fn a(&self) -> &MPoly {
        &self.a
    }

    pub fn b(&self) -> &MPoly {
        &self.b
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> &NumberField {
        if self.a.is_zero() {
            self.b.field()
        } else {
            self.a.field()
        }
    }

    pub fn promote(&self, field: &NumberField) -> Result<Self, HomError> {
        HomFoliation::new(self.a.promote(field)?, self.b.promote(field)?)
    }

    /// `z A dx + z B dy - (x A + y B) dz`.
    pub fn foliation(&self) -> ProjFoliation {
        make_foliation(&self.a, &self.b).expect("coprime homogeneous data")
    }

    /// The tangent cone `x A + y B` at the origin.
    pub fn cone(&self) -> MPoly {
        let f = self.field().clone();
        let x = MPoly::var_at(&f, &XY, 0);
        let y = MPoly::var_at(&f, &XY, 1);
        &(&x * &self.a) + &(&y * &self.b)
    }

    /// `A_x B_y - A_y B_x`.
    pub fn discriminant(&self) -> MPoly {
        let (a, b) = (&self.a, &self.b);
        &(&a.derivative(0) * &b.derivative(1)) - &(&a.derivative(1) * &b.derivative(0))
    }
}

/// Tangent cone and discriminant of a homogeneous foliation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomInvariants {
    pub cone: MPoly,
    pub discriminant: MPoly,
}

pub fn hom_invariants(h: &HomFoliation) -> Result<HomInvariants, HomError> {
    let discriminant = h.discriminant();
    if discriminant.is_zero() {
        return Err(HomError::DegenerateDiscriminant);
    }
    Ok(HomInvariants {
        cone: h.cone(),
        discriminant,
    })
}

pub(crate) fn squarefree_form(p: &MPoly) -> MPoly {
    let g = gcd(&gcd(p, &p.derivative(0)), &p.derivative(1));
    p.exact_divide(&g).expect("gcd divides").normalize()
}

/// Convex exactly when every line of the discriminant lies in the tangent cone.
pub fn is_convex_hom(h: &HomFoliation) -> Result<bool, HomError> {
    let inv = hom_invariants(h)?;
    Ok(squarefree_form(&inv.discriminant).divides(&inv.cone)?)
}

#[cfg(test)]
mod tests;
