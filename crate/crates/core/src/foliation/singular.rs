use crate::numeric::{AlgNum, NumberField};
use crate::polynomial::{resultant_at, roots_in_field, MPoly, UPoly};

use super::form::ProjFoliation;
use super::local::local_vector_field;
use super::milnor::milnor_number;
use super::point::ProjPoint;
use super::FoliationError;

/// Singular points found in a field, with their Milnor numbers.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub points: Vec<ProjPoint>,
    pub milnor: Vec<u32>,
    /// The expected total `d^2 + d + 1`.
    pub expected_total: u32,
    /// Univariate eliminants whose roots were not all in the field.
    pub unresolved: Vec<UPoly>,
}

impl SingularLocus {
    pub fn milnor_total(&self) -> u32 {
        self.milnor.iter().sum()
    }

    /// True when the Milnor numbers of the points found account for every singularity.
    pub fn is_complete(&self) -> bool {
        self.milnor_total() == self.expected_total
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProjPoint, u32)> {
        self.points.iter().zip(self.milnor.iter().copied())
    }
}

fn univariate(p: &MPoly, var: usize) -> UPoly {
    UPoly::from_mpoly(p, var).expect("single variable")
}

// Common zeros of `f` and `g` in the chart z = 1, before filtering.
fn common_affine_zeros(
    f: &MPoly,
    g: &MPoly,
    unresolved: &mut Vec<UPoly>,
) -> Result<Vec<(AlgNum, AlgNum)>, FoliationError> {
    let r = resultant_at(f, g, 1)?;
    let rs = roots_in_field(&univariate(&r, 0))?;
    if !rs.is_complete() {
        unresolved.push(rs.unresolved.clone());
    }
    let mut out = Vec::new();
    for (x0, _) in &rs.roots {
        let fy = univariate(&f.specialize(0, x0), 1);
        let gy = univariate(&g.specialize(0, x0), 1);
        let h = fy.gcd(&gy);
        if h.is_zero() {
            return Err(FoliationError::NonIsolated);
        }
        let ys = roots_in_field(&h)?;
        if !ys.is_complete() {
            unresolved.push(ys.unresolved.clone());
        }
        out.extend(ys.roots.iter().map(|(y0, _)| (x0.clone(), y0.clone())));
    }
    Ok(out)
}

fn finite_points(
    f: &ProjFoliation,
    unresolved: &mut Vec<UPoly>,
) -> Result<Vec<ProjPoint>, FoliationError> {
    let restrict = |p: &MPoly| -> MPoly {
        p.dehomogenize('z')
            .and_then(|q| q.with_vars(&super::XY))
            .expect("x, y, z ring")
    };
    let polys: Vec<MPoly> = f.coefficients().iter().map(|p| restrict(p)).collect();
    let nonzero: Vec<&MPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    let first = nonzero[0];
    let rest: Vec<&MPoly> = nonzero[1..].to_vec();
    let field = first.field().clone();
    // Pair `first` with a combination of the others whose resultant is not identically zero.
    let bound = first.total_degree().unwrap_or(0) as i64 + 2;
    let mut chosen = None;
    for k in 0..=bound {
        let mut g = MPoly::zero(&field, &super::XY);
        for (i, p) in rest.iter().enumerate() {
            g = &g + &p.scale(&field.int(if i == 0 { 1 } else { k }));
        }
        if rest.is_empty() {
            break;
        }
        if !resultant_at(first, &g, 1)?.is_zero() {
            chosen = Some(g);
            break;
        }
    }
    let Some(g) = chosen else {
        // Only one nonzero coefficient, or no usable pair: the zero set is not finite in this chart.
        if rest.is_empty() && first.is_constant() {
            return Ok(Vec::new());
        }
        return Err(FoliationError::NonIsolated);
    };
    let mut points = Vec::new();
    for (x0, y0) in common_affine_zeros(first, &g, unresolved)? {
        let pt = [x0.clone(), y0.clone()];
        let mut vanish = true;
        for p in &polys {
            if !p.evaluate(&pt)?.is_zero() {
                vanish = false;
                break;
            }
        }
        if vanish {
            points.push(ProjPoint::affine(x0, y0));
        }
    }
    Ok(points)
}

fn points_at_infinity(
    f: &ProjFoliation,
    unresolved: &mut Vec<UPoly>,
) -> Result<Vec<ProjPoint>, FoliationError> {
    let field = f.field().clone();
    let mut out = Vec::new();
    // Points [1:t:0].
    let mut common: Option<UPoly> = None;
    for p in f.coefficients() {
        let q = p
            .specialize(2, &field.zero())
            .specialize(0, &field.one());
        let u = univariate(&q, 1);
        common = Some(match common {
            None => u,
            Some(c) => c.gcd(&u),
        });
    }
    let common = common.expect("three coefficients");
    if common.is_zero() {
        return Err(FoliationError::NonIsolated);
    }
    let rs = roots_in_field(&common)?;
    if !rs.is_complete() {
        unresolved.push(rs.unresolved.clone());
    }
    for (t, _) in rs.roots {
        out.push(ProjPoint::new(field.one(), t, field.zero())?);
    }
    let y_axis = [field.zero(), field.one(), field.zero()];
    let mut vanish = true;
    for p in f.coefficients() {
        if !p.evaluate(&y_axis)?.is_zero() {
            vanish = false;
        }
    }
    if vanish {
        out.push(ProjPoint::new(field.zero(), field.one(), field.zero())?);
    }
    Ok(out)
}

/// All singular points with coordinates in `field`, ordered by chart and coordinates.
pub fn singular_points(f: &ProjFoliation, field: &NumberField) -> Result<SingularLocus, FoliationError> {
    let field = super::form::larger_field(f.field(), field)?;
    let f = f.promote(&field)?;
    let mut unresolved = Vec::new();
    let mut points = finite_points(&f, &mut unresolved)?;
    points.extend(points_at_infinity(&f, &mut unresolved)?);
    points.sort();
    points.dedup();
    let mut milnor = Vec::with_capacity(points.len());
    for p in &points {
        let x = local_vector_field(&f, p)?;
        milnor.push(milnor_number(&x.p, &x.q)?);
    }
    let d = f.degree();
    Ok(SingularLocus {
        points,
        milnor,
        expected_total: d * d + d + 1,
        unresolved,
    })
}
