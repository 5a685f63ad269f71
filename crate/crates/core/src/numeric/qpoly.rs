//! Dense univariate polynomials over the rationals, with exact rational root finding.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::modular;
use super::rational::{common_denominator, simplest_between, Rational};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => QPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
        }
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Integer multiple with coprime integer coefficients (positive leading coefficient).
    pub(crate) fn primitive_integer(&self) -> Vec<BigInt> {
        let den = common_denominator(self.coeffs.iter());
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        if !g.is_zero() {
            for c in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
        ints
    }

    fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        seq
    }

    /// All rational roots, sorted ascending, without multiplicity.
    ///
    /// Roots are found modulo a prime, lifted p-adically past the size bound that any
    /// rational root must satisfy, reconstructed, and then checked exactly.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.squarefree_part();
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            p = p.div_rem(&QPoly::new(vec![Rational::zero(), Rational::one()])).0;
        }
        match p.degree() {
            Some(0) | None => {}
            Some(1) => roots.push(-&p.coeffs[0] / &p.coeffs[1]),
            Some(_) => {
                for cand in modular::rational_root_candidates(&p.primitive_integer()) {
                    if p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Same contract as [`QPoly::rational_roots`], by Sturm-sequence bisection.
    pub fn rational_roots_sturm(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.squarefree_part();
        // Zero is handled up front so the Cauchy bound below sees a nonzero constant term.
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            p = p.div_rem(&QPoly::new(vec![Rational::zero(), Rational::one()])).0;
        }
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        if p.degree() == Some(1) {
            roots.push(-&p.coeffs[0] / &p.coeffs[1]);
            roots.sort();
            return roots;
        }
        let ints = p.primitive_integer();
        let lead = Rational::from_integer(ints.last().unwrap().abs());
        // Two distinct fractions with denominators dividing `lead` are at least 1/lead^2 apart.
        let width = (lead.clone() * lead.clone() * Rational::from_integer(BigInt::from(2))).recip();
        let bound = Rational::one()
            + p.coeffs
                .iter()
                .take(p.coeffs.len() - 1)
                .map(|c| (c / p.leading().unwrap()).abs())
                .max()
                .unwrap_or_else(Rational::zero);
        let sturm = p.sturm_sequence();
        let variations = |x: &Rational| -> usize {
            let mut count = 0;
            let mut last = 0i8;
            for s in &sturm {
                let v = s.eval(x);
                let sign = if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                };
                if sign != 0 {
                    if last != 0 && sign != last {
                        count += 1;
                    }
                    last = sign;
                }
            }
            count
        };
        // Half-open intervals (lo, hi] holding at least one real root.
        let mut stack = vec![(-bound.clone(), bound.clone(), variations(&-bound.clone()) - variations(&bound))];
        while let Some((lo, hi, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if &hi - &lo < width {
                let cand = simplest_between(&lo, &hi);
                if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
                continue;
            }
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            let vm = variations(&mid);
            let left = variations(&lo) - vm;
            stack.push((lo, mid.clone(), left));
            stack.push((mid, hi, count - left));
        }
        roots.sort();
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{rat, ratio};

    fn both(p: &QPoly) -> Vec<Rational> {
        let a = p.rational_roots();
        assert_eq!(a, p.rational_roots_sturm());
        a
    }

    fn qp(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn roots_of_products_of_linear_factors() {
        // (2t - 1)(3t + 2)(t - 5)(t^2 + 1)
        let p = qp(&[10, -7, -19, -1, -29, 6]);
        let (q, r) = p.div_rem(&qp(&[1, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(both(&q), vec![ratio(-2, 3), ratio(1, 2), rat(5)]);
        assert_eq!(both(&p), vec![ratio(-2, 3), ratio(1, 2), rat(5)]);
    }

    #[test]
    fn close_roots_are_separated() {
        // (100t - 1)(101t - 1)
        let p = qp(&[1, -201, 10100]);
        assert_eq!(both(&p), vec![ratio(1, 101), ratio(1, 100)]);
        // (t - 1/3)^2 (t + 7)
        let q = QPoly::new(vec![ratio(7, 9), ratio(-41, 9), ratio(19, 3), rat(1)]);
        assert_eq!(both(&q), vec![rat(-7), ratio(1, 3)]);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        assert!(both(&qp(&[-2, 0, 1])).is_empty());
        assert!(both(&qp(&[1, 1, 1])).is_empty());
        assert_eq!(both(&qp(&[0, -2, 0, 1])), vec![rat(0)]);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]
        #[test]
        fn modular_and_sturm_root_finders_agree(
            roots in proptest::collection::vec((-30i64..30, 1i64..12), 1..6),
            extra in (-5i64..5, -5i64..5),
        ) {
            let mut p = qp(&[extra.0, extra.1, 1]);
            for (a, b) in &roots {
                p = QPoly::new(poly_mul(p.coeffs(), &[rat(-*a), rat(*b)]));
            }
            let fast = p.rational_roots();
            proptest::prop_assert_eq!(&fast, &p.rational_roots_sturm());
            for (a, b) in &roots {
                proptest::prop_assert!(fast.contains(&ratio(*a, *b)));
            }
        }
    }

    fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
}
