use std::collections::BTreeMap;
use std::fmt;

use crate::foliation::{inflection_divisor, local_invariants, Line, ProjPoint};
use crate::numeric::AlgNum;
use crate::polynomial::{linear_factors, roots_in_field, MPoly, UPoly};

use super::{HomError, HomFoliation};

/// A rational map `z -> numerator(z) / denominator(z)` of the Riemann sphere, with monic
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSelfMap {
    numerator: UPoly,
    denominator: UPoly,
    degree: u32,
}

impl RationalSelfMap {
    pub fn new(numerator: UPoly, denominator: UPoly) -> Result<Self, HomError> {
        if denominator.is_zero() {
            return Err(crate::polynomial::PolyError::DivisionByZeroPoly.into());
        }
        let g = numerator.gcd(&denominator);
        if g.deg() > 0 {
            return Err(HomError::CommonFactor(format!("{:?}", g)));
        }
        let lc = denominator.leading().inverse()?;
        let (numerator, denominator) = (numerator.scale(&lc), denominator.scale(&lc));
        let degree = numerator.deg().max(denominator.deg()) as u32;
        if degree < 2 {
            return Err(HomError::DegreeTooSmall(degree));
        }
        Ok(RationalSelfMap {
            numerator,
            denominator,
            degree,
        })
    }

    pub fn numerator(&self) -> &UPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UPoly {
        &self.denominator
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `numerator - z * denominator`, whose roots are the finite fixed points.
    pub fn fixed_point_polynomial(&self) -> UPoly {
        let f = self.numerator.field().clone();
        let z = UPoly::new(&f, vec![f.zero(), f.one()]);
        self.numerator.sub(&z.mul(&self.denominator))
    }

    /// `N' D - N D'`, whose roots are the finite critical points.
    pub fn critical_polynomial(&self) -> UPoly {
        let (n, d) = (&self.numerator, &self.denominator);
        n.derivative().mul(d).sub(&n.mul(&d.derivative()))
    }
}

impl fmt::Display for RationalSelfMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &UPoly| p.to_mpoly(&['z'], 0).to_string();
        if self.denominator.deg() == 0 && self.denominator.leading().is_one() {
            write!(f, "{}", show(&self.numerator))
        } else {
            write!(f, "({}) / ({})", show(&self.numerator), show(&self.denominator))
        }
    }
}

/// A point of the Riemann sphere in the affine coordinate `z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpherePoint {
    Finite(AlgNum),
    Infinity,
}

impl SpherePoint {
    /// The direction `y = z x` of a line through the origin, `x = 0` being infinity.
    pub fn of_line(line: &Line) -> SpherePoint {
        let [a, b, _] = line.coeffs();
        if b.is_zero() {
            SpherePoint::Infinity
        } else {
            SpherePoint::Finite(-&(a / b))
        }
    }

    /// The point at infinity `[1:z:0]`, or `[0:1:0]`.
    pub fn point_at_infinity(&self, field: &crate::numeric::NumberField) -> ProjPoint {
        match self {
            SpherePoint::Finite(z) => {
                ProjPoint::new(field.one(), z.clone(), field.zero()).expect("nonzero")
            }
            SpherePoint::Infinity => {
                ProjPoint::new(field.zero(), field.one(), field.zero()).expect("nonzero")
            }
        }
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(z) => write!(f, "{z}"),
            SpherePoint::Infinity => f.write_str("inf"),
        }
    }
}

/// `z -> -A(1, z) / B(1, z)` on the slopes `z = y / x` of lines through the origin.
pub fn gmap(h: &HomFoliation) -> Result<RationalSelfMap, HomError> {
    let one = h.field().one();
    let slice = |p: &MPoly| UPoly::from_mpoly(&p.specialize(0, &one), 1).expect("y only");
    RationalSelfMap::new(slice(&-h.a()), slice(h.b()))
}

/// Fixed and critical points with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmapAnalysis {
    pub fixed: Vec<(SpherePoint, u32)>,
    pub critical: Vec<(SpherePoint, u32)>,
    /// Factors whose roots lie outside the field; those points are missing above.
    pub unresolved: Vec<UPoly>,
}

impl GmapAnalysis {
    pub fn is_fixed(&self, p: &SpherePoint) -> bool {
        self.fixed.iter().any(|(q, _)| q == p)
    }

    pub fn fixed_critical(&self) -> Vec<(SpherePoint, u32)> {
        self.critical.iter().filter(|(p, _)| self.is_fixed(p)).cloned().collect()
    }

    pub fn non_fixed_critical(&self) -> Vec<(SpherePoint, u32)> {
        self.critical.iter().filter(|(p, _)| !self.is_fixed(p)).cloned().collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unresolved.is_empty()
    }
}

fn points_with_infinity(
    poly: &UPoly,
    total: u32,
    unresolved: &mut Vec<UPoly>,
) -> Result<Vec<(SpherePoint, u32)>, HomError> {
    let rs = roots_in_field(poly)?;
    if !rs.is_complete() {
        unresolved.push(rs.unresolved.clone());
    }
    let mut out: Vec<(SpherePoint, u32)> = rs
        .roots
        .into_iter()
        .map(|(r, e)| (SpherePoint::Finite(r), e))
        .collect();
    let at_infinity = total - poly.deg() as u32;
    if at_infinity > 0 {
        out.push((SpherePoint::Infinity, at_infinity));
    }
    Ok(out)
}

/// There are `d + 1` fixed points and `2d - 2` critical points with multiplicity; whatever
/// the finite roots miss sits at infinity.
pub fn gmap_analysis(g: &RationalSelfMap) -> Result<GmapAnalysis, HomError> {
    let d = g.degree();
    let mut unresolved = Vec::new();
    let fixed = points_with_infinity(&g.fixed_point_polynomial(), d + 1, &mut unresolved)?;
    let critical = points_with_infinity(&g.critical_polynomial(), 2 * d - 2, &mut unresolved)?;
    Ok(GmapAnalysis {
        fixed,
        critical,
        unresolved,
    })
}

/// The three correspondences between the self-map and the geometry of the foliation, each an
/// equality of point sets with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmapCoherence {
    /// Fixed points are the lines of the tangent cone.
    pub fixed_is_cone: bool,
    /// Fixed critical points of multiplicity `k` are radial points at infinity of order `k`.
    pub fixed_critical_is_radial: bool,
    /// Non-fixed critical points of multiplicity `k` are transverse inflection lines of order `k`.
    pub non_fixed_critical_is_transverse: bool,
    pub complete: bool,
}

impl GmapCoherence {
    pub fn holds(&self) -> bool {
        self.fixed_is_cone && self.fixed_critical_is_radial && self.non_fixed_critical_is_transverse
    }
}

fn tally(items: impl IntoIterator<Item = (SpherePoint, u32)>) -> BTreeMap<SpherePoint, u32> {
    let mut m = BTreeMap::new();
    for (p, e) in items {
        *m.entry(p).or_insert(0) += e;
    }
    m
}

/// Compares [`gmap_analysis`] with the tangent cone, the local invariants at infinity and the
/// inflection curve of the homogenized foliation.
pub fn gmap_coherence(h: &HomFoliation) -> Result<GmapCoherence, HomError> {
    let field = h.field().clone();
    let analysis = gmap_analysis(&gmap(h)?)?;
    let f = h.foliation();

    let cone = h.cone().with_vars(&crate::foliation::XYZ)?;
    let cone_lines = linear_factors(&cone)?;
    let mut complete = analysis.is_complete() && cone_lines.remainder.is_constant();
    let from_cone = tally(cone_lines.lines.factors().iter().map(|(l, e)| {
        (SpherePoint::of_line(&Line::from_form(l).expect("linear")), *e)
    }));
    let fixed_is_cone = from_cone == tally(analysis.fixed.clone());

    let mut radial = Vec::new();
    for (p, _) in &analysis.fixed {
        let s = p.point_at_infinity(&field);
        let local = local_invariants(&f, &s, &[])?;
        if let Some(k) = local.radial_order() {
            radial.push((p.clone(), k));
        }
    }
    let fixed_critical_is_radial = tally(radial) == tally(analysis.fixed_critical());

    let infl = inflection_divisor(&f)?;
    let transverse_poly = &infl.transverse_polynomial;
    if !transverse_poly.is_constant() {
        let rest = linear_factors(transverse_poly)?.remainder;
        complete &= rest.is_constant();
    }
    let transverse = tally(
        infl.transverse_lines()
            .into_iter()
            .map(|(l, e)| (SpherePoint::of_line(&l), e)),
    );
    let non_fixed_critical_is_transverse = transverse == tally(analysis.non_fixed_critical());
    Ok(GmapCoherence {
        fixed_is_cone,
        fixed_critical_is_radial,
        non_fixed_critical_is_transverse,
        complete,
    })
}
