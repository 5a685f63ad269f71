use crate::polynomial::{gcd, linear_factors, Divisor, MPoly};

use super::form::ProjFoliation;
use super::point::Line;
use super::{FoliationError, XYZ};

/// The inflection curve of a foliation and its split into invariant lines and the rest.
#[derive(Clone, Debug)]
pub struct InflectionDecomposition {
    /// Homogeneous equation of degree `3d`.
    pub polynomial: MPoly,
    /// Product of the invariant components (all lines), with multiplicity.
    pub invariant_polynomial: MPoly,
    pub transverse_polynomial: MPoly,
    /// Line factors over the field, plus any remaining factor without a linear factor.
    pub full: Divisor,
    pub invariant_part: Divisor,
    pub transverse_part: Divisor,
}

impl InflectionDecomposition {
    /// Lines of the invariant part that split over the field.
    pub fn invariant_lines(&self) -> Vec<(Line, u32)> {
        lines_of(&self.invariant_part)
    }

    pub fn transverse_lines(&self) -> Vec<(Line, u32)> {
        lines_of(&self.transverse_part)
    }
}

fn lines_of(d: &Divisor) -> Vec<(Line, u32)> {
    d.factors()
        .iter()
        .filter(|(p, _)| p.total_degree() == Some(1))
        .map(|(p, e)| (Line::from_form(p).expect("linear factor"), *e))
        .collect()
}

/// The three coefficients of `omega ^ dh` for a polynomial `h` in `x, y, z`.
pub fn wedge_with_differential(f: &ProjFoliation, h: &MPoly) -> [MPoly; 3] {
    let [a, b, c] = f.coefficients();
    let (hx, hy, hz) = (h.derivative(0), h.derivative(1), h.derivative(2));
    [
        &(a * &hy) - &(b * &hx),
        &(a * &hz) - &(c * &hx),
        &(b * &hz) - &(c * &hy),
    ]
}

/// Whether the curve `h = 0` is invariant: `h` divides every coefficient of `omega ^ dh`.
pub fn is_invariant_curve(f: &ProjFoliation, h: &MPoly) -> bool {
    let h = match h.promote(f.field()) {
        Ok(p) => p,
        Err(_) => match f.promote(h.field()) {
            Ok(g) => return is_invariant_curve(&g, h),
            Err(_) => return false,
        },
    };
    wedge_with_differential(f, &h)
        .iter()
        .all(|w| h.divides(w).unwrap_or(false))
}

pub fn is_invariant_line(f: &ProjFoliation, line: &Line) -> bool {
    is_invariant_curve(f, &line.form())
}

/// The affine inflection polynomial `P X(Q) - Q X(P)` of `X = P d/dx + Q d/dy` on `z = 1`.
pub fn affine_inflection(f: &ProjFoliation) -> MPoly {
    let (a, b) = f.affine_form();
    let p = b;
    let q = -&a;
    let apply = |g: &MPoly| &(&p * &g.derivative(0)) + &(&q * &g.derivative(1));
    &(&p * &apply(&q)) - &(&q * &apply(&p))
}

/// The inflection polynomial of degree `3d`, homogenized from the chart `z = 1`.
pub fn inflection_polynomial(f: &ProjFoliation) -> Result<MPoly, FoliationError> {
    let e = affine_inflection(f);
    if e.is_zero() {
        return Err(FoliationError::EveryLeafIsLinear);
    }
    let n = 3 * f.degree();
    let deg = e.total_degree().unwrap_or(0);
    if deg > n {
        return Err(FoliationError::InflectionDegree(deg, n));
    }
    Ok(e.homogenize('z', n)?)
}

fn squarefree_part(p: &MPoly) -> MPoly {
    if p.is_constant() {
        return p.clone();
    }
    let mut g = p.clone();
    for i in 0..p.nvars() {
        if p.involves(i) {
            g = gcd(&g, &p.derivative(i));
        }
    }
    p.exact_divide(&g).expect("gcd divides")
}

// Splits an affine polynomial into the part whose components divide `squarefree_inv` and the rest.
fn split_off(p: &MPoly, squarefree_inv: &MPoly) -> (MPoly, MPoly) {
    let mut inv = MPoly::one(p.field(), p.vars());
    let mut rest = p.clone();
    loop {
        let g = gcd(&rest, squarefree_inv);
        if g.is_constant() {
            break;
        }
        rest = rest.exact_divide(&g).expect("gcd divides");
        inv = &inv * &g;
    }
    (inv, rest)
}

fn homogenize_own(p: &MPoly) -> MPoly {
    let d = p.total_degree().unwrap_or(0);
    p.homogenize('z', d)
        .expect("own degree")
        .with_vars(&XYZ)
        .expect("x, y, z")
}

fn divisor_of(p: &MPoly) -> Result<(Divisor, MPoly), FoliationError> {
    if p.is_constant() {
        return Ok((Divisor::new(), p.clone()));
    }
    let lf = linear_factors(p)?;
    let mut d = lf.lines.clone();
    d.push(lf.remainder.clone(), 1);
    Ok((d, lf.remainder))
}

/// Computes the inflection curve and separates its invariant lines from the transverse part.
pub fn inflection_divisor(f: &ProjFoliation) -> Result<InflectionDecomposition, FoliationError> {
    let polynomial = inflection_polynomial(f)?;
    let e = affine_inflection(f);
    let field = f.field().clone();
    let (a, b) = f.affine_form();
    // A component h of the affine curve is invariant exactly when it divides A h_y - B h_x;
    // for the squarefree part s this singles out the invariant components of s.
    let s = squarefree_part(&e).normalize();
    let wedge = &(&a * &s.derivative(1)) - &(&b * &s.derivative(0));
    let s_inv = gcd(&s, &wedge);
    let (inv_aff, tr_aff) = split_off(&e, &s_inv);
    let at_infinity = 3 * f.degree() - e.total_degree().unwrap_or(0);
    let z = MPoly::var_at(&field, &XYZ, 2).pow(at_infinity);
    let infinity_invariant = is_invariant_line(f, &Line::infinity(&field));
    let (mut inv, mut tr) = (homogenize_own(&inv_aff), homogenize_own(&tr_aff));
    if infinity_invariant {
        inv = &inv * &z;
    } else {
        tr = &tr * &z;
    }
    let (invariant_part, _) = divisor_of(&inv)?;
    let (transverse_part, _) = divisor_of(&tr)?;
    Ok(InflectionDecomposition {
        polynomial,
        full: invariant_part.mul(&transverse_part),
        invariant_polynomial: inv.normalize(),
        transverse_polynomial: tr.normalize(),
        invariant_part,
        transverse_part,
    })
}

/// A foliation is convex when its inflection curve consists of invariant lines.
pub fn is_convex(f: &ProjFoliation) -> Result<bool, FoliationError> {
    Ok(inflection_divisor(f)?.transverse_polynomial.is_constant())
}
