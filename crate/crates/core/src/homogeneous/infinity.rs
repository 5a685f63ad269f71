//! Singular points on the line at infinity: tangency orders, Camacho–Sad polynomial and the
//! divisor identity relating them to the discriminant.

use crate::foliation::{inflection_divisor, local_invariants, FoliationError, Line, XY, XYZ};
use crate::numeric::ratio;
use crate::polynomial::{linear_factors, roots_in_field, MPoly, UPoly};

use super::gmap::SpherePoint;
use super::{HomError, HomFoliation};

/// The variable of the Camacho–Sad polynomial.
pub const LAMBDA: [char; 1] = ['λ'];

/// Singular points at infinity sharing one tangency order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityGroup {
    /// Product of the lines joining the origin to the points, a form in `x, y`.
    pub lines: MPoly,
    pub tau: u32,
}

fn slice_at_x1(p: &MPoly) -> UPoly {
    let one = p.field().one();
    UPoly::from_mpoly(&p.specialize(0, &one), 1).expect("y only")
}

// `x^n p(y/x)` for the points `[1:t:0]` with `p(t) = 0`.
fn lines_of_slopes(p: &UPoly) -> MPoly {
    let field = p.field().clone();
    let n = p.deg() as u32;
    MPoly::from_terms(
        &field,
        &XY,
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![n - i as u32, i as u32], c.clone())),
    )
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// Singular points of the homogenized foliation on `z = 0`, grouped by tangency order.
///
/// At `[1:t:0]` the local generator is `C(1, t+u) d/du + v B(1, t+u) d/dv`; its radial defect
/// in degree `k` is `u^k v (A^(k)(1,t) + t B^(k)(1,t)) / k!`. The order is found for all roots of
/// the tangent cone at once by splitting with gcds, so no root needs to lie in the field.
pub fn infinity_tangency(h: &HomFoliation) -> Result<Vec<InfinityGroup>, HomError> {
    let field = h.field().clone();
    let d = h.degree();
    let cone = slice_at_x1(&h.cone());
    let a = slice_at_x1(h.a());
    let b = slice_at_x1(h.b());
    let t = UPoly::new(&field, vec![field.zero(), field.one()]);
    let mut groups = Vec::new();
    let mut pending = vec![(cone.squarefree_part(), 1u32)];
    let (mut da, mut db) = (a.clone(), b.clone());
    for k in 1..=d {
        da = da.derivative();
        db = db.derivative();
        let ek = da.add(&t.mul(&db)).scale(&field.rat(ratio(1, factorial(k))));
        let mut next = Vec::new();
        for (p, _) in pending {
            if p.deg() == 0 {
                continue;
            }
            let g = p.gcd(&ek);
            let settled = p.exact_div(&g)?;
            if settled.deg() > 0 {
                groups.push(InfinityGroup {
                    lines: lines_of_slopes(&settled).normalize(),
                    tau: k,
                });
            }
            next.push((g, k + 1));
        }
        pending = next;
    }
    if pending.iter().any(|(p, _)| p.deg() > 0) {
        return Err(FoliationError::TauExceedsDegree(d).into());
    }
    if cone.deg() < d as usize + 1 {
        let s = SpherePoint::Infinity.point_at_infinity(&field);
        let local = local_invariants(&h.foliation(), &s, &[])?;
        groups.push(InfinityGroup {
            lines: MPoly::var_at(&field, &XY, 0),
            tau: local.tau,
        });
    }
    Ok(groups)
}

/// Directions of the singular points at infinity, which must all lie in the field.
pub fn points_at_infinity(h: &HomFoliation) -> Result<Vec<SpherePoint>, HomError> {
    let lf = linear_factors(&h.cone())?;
    if !lf.remainder.is_constant() {
        return Err(HomError::RootOutsideField(lf.remainder.normalize().to_string()));
    }
    let mut pts: Vec<SpherePoint> = lf
        .lines
        .factors()
        .iter()
        .map(|(l, _)| {
            let l = l.with_vars(&XYZ).expect("x, y");
            SpherePoint::of_line(&Line::from_form(&l).expect("linear"))
        })
        .collect();
    pts.sort();
    Ok(pts)
}

/// `prod (λ - CS(H, L∞, s))` over the singular points `s` on the line at infinity.
pub fn cs_polynomial(h: &HomFoliation) -> Result<MPoly, HomError> {
    let field = h.field().clone();
    let f = h.foliation();
    let infinity = Line::infinity(&field);
    let lambda = MPoly::var_at(&field, &LAMBDA, 0);
    let mut out = MPoly::one(&field, &LAMBDA);
    for p in points_at_infinity(h)? {
        let s = p.point_at_infinity(&field);
        let cs = local_invariants(&f, &s, std::slice::from_ref(&infinity))?.cs_along(&infinity)?;
        out = &out * &(&lambda - &MPoly::constant(&field, &LAMBDA, cs));
    }
    Ok(out)
}

/// Both sides of `D_tr = I_tr * prod L_s^(tau(s) - 1)`.
#[derive(Clone, Debug)]
pub struct TangencyDivisorCheck {
    pub discriminant: MPoly,
    /// The transverse part of the inflection curve, a form in `x, y`.
    pub transverse: MPoly,
    pub groups: Vec<InfinityGroup>,
    /// The discriminant and the product agree up to a nonzero scalar.
    pub holds: bool,
    /// Tangency orders at points in the field agree with the local computation.
    pub local_agreement: bool,
}

pub fn tangency_divisor_check(h: &HomFoliation) -> Result<TangencyDivisorCheck, HomError> {
    let field = h.field().clone();
    let discriminant = h.discriminant();
    if discriminant.is_zero() {
        return Err(HomError::DegenerateDiscriminant);
    }
    let f = h.foliation();
    let transverse = inflection_divisor(&f)?
        .transverse_polynomial
        .restrict_vars(&XY)?;
    let groups = infinity_tangency(h)?;
    let mut product = transverse.clone();
    for g in &groups {
        product = &product * &g.lines.pow(g.tau - 1);
    }
    let holds = product.normalize() == discriminant.normalize();
    let mut local_agreement = true;
    for g in &groups {
        let slopes = slice_at_x1(&g.lines);
        let mut points: Vec<SpherePoint> = roots_in_field(&slopes)?
            .roots
            .into_iter()
            .map(|(r, _)| SpherePoint::Finite(r))
            .collect();
        if slopes.deg() < g.lines.total_degree().unwrap_or(0) as usize {
            points.push(SpherePoint::Infinity);
        }
        for p in points {
            let local = local_invariants(&f, &p.point_at_infinity(&field), &[])?;
            local_agreement &= local.tau == g.tau && local.nu == 1;
        }
    }
    Ok(TangencyDivisorCheck {
        discriminant,
        transverse,
        groups,
        holds,
        local_agreement,
    })
}
