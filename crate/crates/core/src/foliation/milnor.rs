use crate::polynomial::{gcd, MPoly, UPoly};

use super::FoliationError;

const STEP_LIMIT: usize = 100_000;

// f(u, 0) as a univariate polynomial in u.
fn on_first_axis(f: &MPoly) -> UPoly {
    let g = f.specialize(1, &f.field().zero());
    UPoly::from_mpoly(&g, 0).expect("only u remains")
}

fn order_at_zero(p: &UPoly) -> u32 {
    p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0) as u32
}

/// Local intersection multiplicity at the origin of the plane curves `p = 0` and `q = 0`.
///
/// Both polynomials live in a two-variable ring; the second variable plays the role of `v`.
pub fn milnor_number(p: &MPoly, q: &MPoly) -> Result<u32, FoliationError> {
    if p.nvars() != 2 || q.nvars() != 2 {
        return Err(FoliationError::NotPlanar);
    }
    if p.is_zero() || q.is_zero() {
        return Err(FoliationError::NonIsolated);
    }
    let g = gcd(p, q);
    if !g.is_constant() && g.constant_term().is_zero() {
        return Err(FoliationError::NonIsolated);
    }
    let v = MPoly::var_at(p.field(), p.vars(), 1);
    let mut f = p.clone();
    let mut h = q.clone();
    let mut total = 0;
    for _ in 0..STEP_LIMIT {
        if !f.constant_term().is_zero() || !h.constant_term().is_zero() {
            return Ok(total);
        }
        let fu = on_first_axis(&f);
        let hu = on_first_axis(&h);
        match (fu.degree(), hu.degree()) {
            (None, None) => return Err(FoliationError::NonIsolated),
            (None, Some(_)) => {
                // f = v * f', and I(v, h) is the order of h(u, 0).
                total += order_at_zero(&hu);
                f = f.exact_divide(&v)?;
            }
            (Some(_), None) => std::mem::swap(&mut f, &mut h),
            (Some(r), Some(s)) => {
                if r > s {
                    std::mem::swap(&mut f, &mut h);
                    continue;
                }
                let shift = crate::polynomial::Monomial(vec![(s - r) as u32, 0]);
                h = &h.scale(&fu.leading()) - &f.mul_monomial(&shift).scale(&hu.leading());
            }
        }
    }
    Err(FoliationError::NonIsolated)
}

/// `true` when the Jacobian determinant of `(p, q)` is nonzero at the origin.
pub fn jacobian_nonzero(p: &MPoly, q: &MPoly) -> bool {
    let at0 = |f: &MPoly, i: usize| f.derivative(i).constant_term();
    !(&(&at0(p, 0) * &at0(q, 1)) - &(&at0(p, 1) * &at0(q, 0))).is_zero()
}
