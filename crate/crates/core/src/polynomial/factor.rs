//! Extraction of linear factors from homogeneous polynomials.

use crate::numeric::AlgNum;

use super::divisor::Divisor;
use super::mpoly::MPoly;
use super::roots::roots_in_field;
use super::univariate::UPoly;
use super::PolyError;

/// Linear factors defined over the coefficient field, and what is left.
#[derive(Clone, Debug)]
pub struct LinearFactorization {
    pub lines: Divisor,
    /// `input = scalar * lines * remainder`; the remainder has no linear factor over the field.
    pub remainder: MPoly,
}

/// Square-free decomposition of a univariate polynomial, returned as (leading coefficient, divisor).
pub fn squarefree_decompose(u: &MPoly) -> Result<(AlgNum, Divisor), PolyError> {
    if u.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let used: Vec<usize> = (0..u.nvars()).filter(|&i| u.involves(i)).collect();
    if used.len() > 1 {
        return Err(PolyError::NotUnivariate);
    }
    let Some(&v) = used.first() else {
        return Ok((u.leading_coefficient(), Divisor::new()));
    };
    let up = UPoly::from_mpoly(u, v)?;
    let parts = up.squarefree_decomposition()?;
    Ok((
        up.leading(),
        Divisor::from_factors(parts.into_iter().map(|(f, e)| (f.to_mpoly(u.vars(), v), e))),
    ))
}

/// All linear factors over the field of a nonzero homogeneous polynomial in two or three variables.
pub fn linear_factors(h: &MPoly) -> Result<LinearFactorization, PolyError> {
    if h.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !h.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    match h.nvars() {
        2 => binary_linear_factors(h, 0, 1),
        3 => ternary_linear_factors(h),
        n => Err(PolyError::ArityMismatch(3, n)),
    }
}

// Linear factors of a form in the variables at indices `a` and `b` (others absent).
fn binary_linear_factors(h: &MPoly, a: usize, b: usize) -> Result<LinearFactorization, PolyError> {
    let field = h.field().clone();
    let vars = h.vars().to_vec();
    let n = h.total_degree().unwrap_or(0);
    // f(t) = h with X_a = 1, X_b = t.
    let mut coeffs = vec![field.zero(); n as usize + 1];
    for (m, c) in h.terms() {
        coeffs[m.0[b] as usize] = c.clone();
    }
    let f = UPoly::new(&field, coeffs);
    let mut lines = Divisor::new();
    let xa = MPoly::var_at(&field, &vars, a);
    let xb = MPoly::var_at(&field, &vars, b);
    let a_mult = n - f.deg() as u32;
    lines.push(xa.clone(), a_mult);
    let rs = roots_in_field(&f)?;
    for (r, e) in &rs.roots {
        lines.push(&xb - &xa.scale(r), *e);
    }
    let remainder = match lines.product() {
        None => h.clone(),
        Some(p) => h.exact_divide(&p)?,
    };
    Ok(LinearFactorization { lines, remainder })
}

// Restriction of a ternary form to the coordinate plane where variable `k` vanishes.
fn slice(h: &MPoly, k: usize) -> MPoly {
    h.specialize(k, &h.field().zero())
}

fn ternary_linear_factors(h: &MPoly) -> Result<LinearFactorization, PolyError> {
    let field = h.field().clone();
    let vars = h.vars().to_vec();
    let coord = |i: usize| MPoly::var_at(&field, &vars, i);
    let mut lines = Divisor::new();
    let mut rest = h.clone();
    for i in 0..3 {
        let v = coord(i);
        loop {
            let (q, r) = rest.div_rem(&v)?;
            if !r.is_zero() {
                break;
            }
            lines.push(v.clone(), 1);
            rest = q;
        }
    }
    if rest.is_constant() {
        return Ok(LinearFactorization {
            lines,
            remainder: rest,
        });
    }
    // Any remaining line x0 + b*x1 + c*x2 restricts to x0 + b*x1 on {x2 = 0} and to
    // x0 + c*x2 on {x1 = 0}; lines without x0 are x1 + c*x2.
    let coeff_ratio = |ln: &MPoly, lead: usize, other: usize| -> Option<AlgNum> {
        let mut e_lead = vec![0; 3];
        e_lead[lead] = 1;
        let mut e_other = vec![0; 3];
        e_other[other] = 1;
        let cl = ln.coefficient(&e_lead);
        if cl.is_zero() {
            return None;
        }
        Some(&ln.coefficient(&e_other) / &cl)
    };
    let s01 = binary_linear_factors(&slice(&rest, 2), 0, 1)?.lines;
    let s02 = binary_linear_factors(&slice(&rest, 1), 0, 2)?.lines;
    let s12 = binary_linear_factors(&slice(&rest, 0), 1, 2)?.lines;
    let bs: Vec<AlgNum> = s01.factors().iter().filter_map(|(l, _)| coeff_ratio(l, 0, 1)).collect();
    let cs: Vec<AlgNum> = s02.factors().iter().filter_map(|(l, _)| coeff_ratio(l, 0, 2)).collect();
    let ds: Vec<AlgNum> = s12.factors().iter().filter_map(|(l, _)| coeff_ratio(l, 1, 2)).collect();
    let mut candidates = Vec::new();
    for b in &bs {
        for c in &cs {
            candidates.push([field.one(), b.clone(), c.clone()]);
        }
    }
    for d in &ds {
        candidates.push([field.zero(), field.one(), d.clone()]);
    }
    // A point on each candidate, used as a cheap filter before dividing.
    for cand in candidates {
        let ln = MPoly::from_terms(
            &field,
            &vars,
            (0..3).map(|i| {
                let mut e = vec![0; 3];
                e[i] = 1;
                (e, cand[i].clone())
            }),
        );
        let probe = if cand[0].is_zero() {
            vec![field.int(1), -&cand[2], field.one()]
        } else {
            vec![-&(&cand[1] + &(&cand[2] * &field.int(2))), field.one(), field.int(2)]
        };
        if !rest.evaluate(&probe)?.is_zero() {
            continue;
        }
        loop {
            let (q, r) = rest.div_rem(&ln)?;
            if !r.is_zero() {
                break;
            }
            lines.push(ln.clone(), 1);
            rest = q;
        }
        if rest.is_constant() {
            break;
        }
    }
    Ok(LinearFactorization {
        lines,
        remainder: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::NumberField;

    #[test]
    fn binary_form_over_cyclotomic_field() {
        let k = NumberField::cube_roots_of_unity('w');
        let v = ['x', 'y'];
        let x = MPoly::var_at(&k, &v, 0);
        let y = MPoly::var_at(&k, &v, 1);
        let h = &(&x * &y.pow(4)) - &(&x.pow(4) * &y);
        let lf = linear_factors(&h).unwrap();
        assert_eq!(lf.lines.len(), 5);
        assert!(lf.remainder.is_constant());
        let w = k.generator();
        assert_eq!(lf.lines.multiplicity(&(&y - &x.scale(&w))), 1);
        assert_eq!(lf.lines.multiplicity(&(&y - &x)), 1);
    }

    #[test]
    fn irreducible_quadratic_over_q() {
        let q = NumberField::rationals();
        let v = ['x', 'y'];
        let x = MPoly::var_at(&q, &v, 0);
        let y = MPoly::var_at(&q, &v, 1);
        let h = &(&x * &x) + &(&y * &y);
        let lf = linear_factors(&h).unwrap();
        assert!(lf.lines.is_empty());
        assert_eq!(lf.remainder, h);
        let m = (&x.pow(3) * &y.pow(3)).scale(&q.int(16));
        let lf = linear_factors(&m).unwrap();
        assert_eq!(lf.lines.multiplicity(&x), 3);
        assert_eq!(lf.lines.multiplicity(&y), 3);
        assert_eq!(lf.remainder, MPoly::constant(&q, &v, q.int(16)));
    }

    #[test]
    fn ternary_lines_are_recovered() {
        let k = NumberField::cube_roots_of_unity('w');
        let v = ['x', 'y', 'z'];
        let x = MPoly::var_at(&k, &v, 0);
        let y = MPoly::var_at(&k, &v, 1);
        let z = MPoly::var_at(&k, &v, 2);
        let w = k.generator();
        let l1 = &(&x - &z.scale(&w)) + &y.scale(&k.int(2));
        let l2 = &y - &z;
        let quad = &(&x * &x) + &(&y * &z);
        let h = &(&(&l1.pow(2) * &l2) * &quad) * &z;
        let lf = linear_factors(&h).unwrap();
        assert_eq!(lf.lines.multiplicity(&l1), 2);
        assert_eq!(lf.lines.multiplicity(&l2), 1);
        assert_eq!(lf.lines.multiplicity(&z), 1);
        assert_eq!(lf.remainder.normalize(), quad.normalize());
    }
}
