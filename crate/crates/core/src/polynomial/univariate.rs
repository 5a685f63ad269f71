//! Dense univariate polynomials over a number field.

use std::fmt;

use crate::numeric::{AlgNum, NumberField, QPoly, Rational};

use super::mpoly::MPoly;
use super::PolyError;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    field: NumberField,
    coeffs: Vec<AlgNum>,
}

impl UPoly {
    pub fn new(field: &NumberField, mut coeffs: Vec<AlgNum>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| c.promote(field).expect("foreign coefficient"))
            .collect();
        UPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &NumberField) -> Self {
        UPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: AlgNum) -> Self {
        let f = c.field().clone();
        UPoly::new(&f, vec![c])
    }

    /// `z - r`.
    pub fn linear_root(r: &AlgNum) -> Self {
        let f = r.field().clone();
        UPoly::new(&f, vec![-r, f.one()])
    }

    pub fn from_qpoly(field: &NumberField, q: &QPoly) -> Self {
        UPoly::new(field, q.coeffs().iter().map(|c| field.rat(c.clone())).collect())
    }

    /// Reads a polynomial in a single variable (other variables must not occur).
    pub fn from_mpoly(p: &MPoly, var: usize) -> Result<Self, PolyError> {
        let mut coeffs = vec![p.field().zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(PolyError::NotUnivariate);
            }
            coeffs[m.0[var] as usize] = c.clone();
        }
        Ok(UPoly::new(p.field(), coeffs))
    }

    /// Writes the polynomial in the variable at index `var` of the given ring.
    pub fn to_mpoly(&self, vars: &[char], var: usize) -> MPoly {
        MPoly::from_terms(
            &self.field,
            vars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; vars.len()];
                e[var] = i as u32;
                (e, c.clone())
            }),
        )
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[AlgNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with zero treated as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> AlgNum {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &AlgNum) -> AlgNum {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        UPoly::new(
            &self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-self.field.one()))
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(&self.field, out)
    }

    pub fn scale(&self, c: &AlgNum) -> UPoly {
        UPoly::new(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::constant(self.field.one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZeroPoly)?;
        if self.coeffs.len() <= dd {
            return Ok((UPoly::zero(&self.field), self.clone()));
        }
        let inv = d.leading().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::new(&self.field, quot), UPoly::new(&self.field, rem)))
    }

    pub fn exact_div(&self, d: &UPoly) -> Result<UPoly, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    /// Monic greatest common divisor (Euclid over the field).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's algorithm: monic pairwise coprime squarefree `f_i` with `self = lc * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UPoly, u32)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.deg() == 0 {
            return Ok(out);
        }
        let f = self.monic();
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut c = f.exact_div(&g)?;
        let mut d = df.exact_div(&g)?.sub(&c.derivative());
        let mut i = 1;
        while c.deg() > 0 {
            let a = c.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            c = c.exact_div(&a)?;
            d = d.exact_div(&a)?.sub(&c.derivative());
            i += 1;
        }
        Ok(out)
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Components in the power basis: `self = sum_k theta^k * parts[k]` with rational `parts[k]`.
    pub fn rational_parts(&self) -> Vec<QPoly> {
        (0..self.field.degree())
            .map(|k| QPoly::new(self.coeffs.iter().map(|c| c.coeffs()[k].clone()).collect()))
            .collect()
    }

    pub fn as_qpoly(&self) -> Option<QPoly> {
        let parts = self.rational_parts();
        if parts[1..].iter().all(|p| p.is_zero()) {
            Some(parts[0].clone())
        } else {
            None
        }
    }

    pub fn rational(&self, q: Rational) -> AlgNum {
        self.field.rat(q)
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly(&['z'], 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn yun_decomposition_of_visible_product() {
        let q = NumberField::rationals();
        // z^3 - z^2
        let u = UPoly::new(&q, vec![q.int(0), q.int(0), q.int(-1), q.int(1)]);
        let parts = u.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (UPoly::new(&q, vec![q.int(-1), q.int(1)]), 1));
        assert_eq!(parts[1], (UPoly::new(&q, vec![q.int(0), q.int(0), q.int(1)]).gcd(&UPoly::new(&q, vec![q.int(0), q.int(1)])), 2));
    }

    #[test]
    fn gcd_over_quadratic_field() {
        let k = NumberField::cube_roots_of_unity('w');
        let w = k.generator();
        let a = UPoly::linear_root(&w).mul(&UPoly::linear_root(&k.int(2)));
        let b = UPoly::linear_root(&w).mul(&UPoly::linear_root(&k.int(3)));
        assert_eq!(a.gcd(&b), UPoly::linear_root(&w));
    }
}
