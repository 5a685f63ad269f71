//! Greatest common divisors of multivariate polynomials.
//!
//! Recursive on the variables: contents are taken with respect to a main variable and the
//! primitive parts are combined with a primitive pseudo-remainder sequence.

use super::mpoly::{MPoly, Monomial};
use super::univariate::UPoly;

/// Normalized gcd (graded-lex leading coefficient 1); gcd(0, 0) = 0.
pub fn gcd(p: &MPoly, q: &MPoly) -> MPoly {
    if p.is_zero() {
        return q.normalize();
    }
    if q.is_zero() {
        return p.normalize();
    }
    if p.is_constant() || q.is_constant() {
        return MPoly::one(p.field(), p.vars());
    }
    let n = p.nvars();
    let used: Vec<usize> = (0..n).filter(|&i| p.involves(i) || q.involves(i)).collect();
    if used.len() == 1 {
        let v = used[0];
        let a = UPoly::from_mpoly(p, v).expect("univariate");
        let b = UPoly::from_mpoly(q, v).expect("univariate");
        return a.gcd(&b).to_mpoly(p.vars(), v);
    }
    let v = *used.last().unwrap();
    if !p.involves(v) {
        return gcd(p, &content(q, v));
    }
    if !q.involves(v) {
        return gcd(&content(p, v), q);
    }
    let cp = content(p, v);
    let cq = content(q, v);
    let g_content = gcd(&cp, &cq);
    let mut a = p.exact_divide(&cp).expect("content divides");
    let mut b = q.exact_divide(&cq).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if !r.involves(v) {
            // Primitive parts share no factor involving v.
            return g_content;
        }
        a = b;
        b = primitive_part(&r, v);
    }
    let g = primitive_part(&b, v);
    (&g_content * &g).normalize()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in variable `v`.
pub fn content(p: &MPoly, v: usize) -> MPoly {
    let mut g = MPoly::zero(p.field(), p.vars());
    for c in p.to_univariate(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return MPoly::one(p.field(), p.vars());
        }
    }
    g
}

pub fn primitive_part(p: &MPoly, v: usize) -> MPoly {
    let c = content(p, v);
    p.exact_divide(&c).expect("content divides").normalize()
}

/// `lc(b)^k * a mod b` in variable `v`, with `k = deg a - deg b + 1`.
pub fn pseudo_remainder(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.degree_in(v);
    let coeffs_b = b.to_univariate(v);
    let lc_b = coeffs_b[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lc_r = r.to_univariate(v)[dr as usize].clone();
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - db;
        let t = (&lc_r * b).mul_monomial(&Monomial(shift));
        r = &(&lc_b * &r) - &t;
    }
    r
}

/// Gcd of a whole list; zero for an empty list.
pub fn gcd_all<'a>(ps: impl IntoIterator<Item = &'a MPoly>) -> Option<MPoly> {
    let mut it = ps.into_iter();
    let first = it.next()?;
    let mut g = first.normalize();
    for p in it {
        g = gcd(&g, p);
    }
    Some(g)
}
