//! Roots of univariate polynomials inside the coefficient field.
//!
//! Over the rationals this is rational root finding. Over a quadratic field `Q(t)` a root
//! `p + q*t` is found by splitting `f(p + q*t)` into its two rational components, eliminating
//! `q` with a resultant and searching both coordinates for rational values. Over fields of
//! higher degree only rational roots are located.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numeric::{AlgNum, NumberField, QPoly, Rational};

use super::mpoly::MPoly;
use super::univariate::UPoly;
use super::PolyError;

/// Roots found in the field, with multiplicities, and the monic cofactor that has none.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<(AlgNum, u32)>,
    pub unresolved: UPoly,
}

impl RootSet {
    /// True when the polynomial splits into linear factors over the field.
    pub fn is_complete(&self) -> bool {
        self.unresolved.deg() == 0
    }
}

pub fn roots_in_field(f: &UPoly) -> Result<RootSet, PolyError> {
    let field = f.field().clone();
    let mut roots = Vec::new();
    let mut unresolved = UPoly::constant(field.one());
    for (g, e) in f.squarefree_decomposition()? {
        let rs = distinct_roots(&g);
        let mut rest = g.clone();
        for r in &rs {
            rest = rest.exact_div(&UPoly::linear_root(r))?;
            roots.push((r.clone(), e));
        }
        unresolved = unresolved.mul(&rest.pow(e));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootSet {
        roots,
        unresolved: unresolved.monic(),
    })
}

/// Distinct roots of a squarefree polynomial.
pub fn distinct_roots(g: &UPoly) -> Vec<AlgNum> {
    let field = g.field().clone();
    match g.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![-&(&g.coeffs()[0] / &g.coeffs()[1])],
        _ => {}
    }
    // Rational roots are common roots of all power-basis components.
    let parts = g.rational_parts();
    let mut common = QPoly::zero();
    for p in &parts {
        common = common.gcd(p);
    }
    let mut out: Vec<AlgNum> = common
        .rational_roots()
        .into_iter()
        .map(|r| field.rat(r))
        .collect();
    let mut rest = g.clone();
    for r in &out {
        rest = rest.exact_div(&UPoly::linear_root(r)).expect("root divides");
    }
    match rest.degree() {
        Some(1) => out.push(-&(&rest.coeffs()[0] / &rest.coeffs()[1])),
        Some(d) if d >= 2 && field.degree() == 2 => out.extend(quadratic_field_roots(&rest)),
        _ => {}
    }
    out.sort();
    out
}

type QBivariate = BTreeMap<(u32, u32), Rational>;

// Non-rational roots p + q*t of a squarefree polynomial over a quadratic field.
fn quadratic_field_roots(h: &UPoly) -> Vec<AlgNum> {
    let field = h.field().clone();
    let vars = ['p', 'q'];
    let p = MPoly::var_at(&field, &vars, 0);
    let q = MPoly::var_at(&field, &vars, 1);
    let image = &p + &q.scale(&field.generator());
    let hz = h.to_mpoly(&['z'], 0);
    let expanded = hz.compose(&[image]).expect("same ring");
    let mut comps: [QBivariate; 2] = [BTreeMap::new(), BTreeMap::new()];
    for (m, c) in expanded.terms() {
        for (k, comp) in comps.iter_mut().enumerate() {
            if !c.coeffs()[k].is_zero() {
                comp.insert((m.0[0], m.0[1]), c.coeffs()[k].clone());
            }
        }
    }
    let resultant = resultant_in_q(&comps[0], &comps[1]);
    if resultant.is_zero() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for p0 in resultant.rational_roots() {
        let a = specialize_p(&comps[0], &p0);
        let b = specialize_p(&comps[1], &p0);
        let g = a.gcd(&b);
        for q0 in g.rational_roots() {
            if q0.is_zero() {
                continue;
            }
            let r = &field.rat(p0.clone()) + &(&field.generator() * &field.rat(q0));
            if h.eval(&r).is_zero() {
                out.push(r);
            }
        }
    }
    out
}

fn specialize_p(f: &QBivariate, p0: &Rational) -> QPoly {
    let deg = f.keys().map(|k| k.1).max().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for ((ep, eq), c) in f {
        coeffs[*eq as usize] += c * num_traits::pow(p0.clone(), *ep as usize);
    }
    QPoly::new(coeffs)
}

fn total_degree(f: &QBivariate) -> u32 {
    f.keys().map(|(a, b)| a + b).max().unwrap_or(0)
}

// Res_q(f, g) as a polynomial in p, by evaluation at integers and interpolation.
fn resultant_in_q(f: &QBivariate, g: &QBivariate) -> QPoly {
    let m = f.keys().map(|k| k.1).max().unwrap_or(0) as usize;
    let n = g.keys().map(|k| k.1).max().unwrap_or(0) as usize;
    let bound = (total_degree(f) * total_degree(g)) as usize;
    let xs: Vec<Rational> = (0..=bound)
        .map(|i| Rational::from_integer(BigInt::from(i)))
        .collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let a = padded(&specialize_p(f, x), m);
            let b = padded(&specialize_p(g, x), n);
            det_rational(sylvester(&a, &b, &Rational::zero()))
        })
        .collect();
    interpolate(&xs, &ys)
}

fn padded(p: &QPoly, deg: usize) -> Vec<Rational> {
    let mut v = p.coeffs().to_vec();
    v.resize(deg + 1, Rational::zero());
    v
}

/// Sylvester matrix of two coefficient vectors (constant term first) with the given formal degrees.
pub(crate) fn sylvester<T: Clone>(a: &[T], b: &[T], zero: &T) -> Vec<Vec<T>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

pub(crate) fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rational::zero();
        };
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        let pk = m[k][k].clone();
        det *= &pk;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pk;
            for j in k..n {
                let t = &factor * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

// Newton interpolation through (xs[i], ys[i]).
fn interpolate(xs: &[Rational], ys: &[Rational]) -> QPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut poly = vec![Rational::zero(); 1];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    QPoly::new(poly)
}

/// Roots in the field of a polynomial given over the rationals.
pub fn rational_poly_roots(field: &NumberField, q: &QPoly) -> Result<RootSet, PolyError> {
    roots_in_field(&UPoly::from_qpoly(field, q))
}
