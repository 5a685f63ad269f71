use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::field::NumberField;
use super::rational::{format_rational, Rational};
use super::NumericError;

/// An element of a number field in the power basis `1, t, ..., t^(m-1)`.
#[derive(Clone)]
pub struct AlgNum {
    field: NumberField,
    coeffs: Vec<Rational>,
}

// Schoolbook product of two coefficient vectors.
fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

// Remainder modulo a monic polynomial.
fn reduce_mod(mut v: Vec<Rational>, modulus: &[Rational]) -> Vec<Rational> {
    let m = modulus.len() - 1;
    while v.len() > m {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - m;
        for (j, c) in modulus.iter().take(m).enumerate() {
            v[shift + j] -= &top * c;
        }
    }
    v.resize(m, Rational::zero());
    v
}

// Remainder of general (not necessarily monic) polynomials, both trimmed.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lc = &b[db];
    while r.len() > db {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let c = top / lc;
        let shift = r.len() - db;
        for (j, bc) in b.iter().take(db).enumerate() {
            r[shift + j] -= &c * bc;
        }
    }
    trim(&mut r);
    r
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_quo(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db] / &b[db];
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
    }
    trim(&mut q);
    q
}

impl AlgNum {
    pub fn from_rational(field: &NumberField, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = q;
        AlgNum {
            field: field.clone(),
            coeffs,
        }
    }

    /// Reduces an arbitrary polynomial in the generator modulo the minimal polynomial.
    pub fn from_power_basis(field: &NumberField, coeffs: Vec<Rational>) -> Self {
        AlgNum {
            field: field.clone(),
            coeffs: reduce_mod(coeffs, field.minpoly()),
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational, when it lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    // Brings two operands into a common field; rationals promote into any field.
    fn align(&self, other: &AlgNum) -> Result<(AlgNum, AlgNum), NumericError> {
        if self.field == other.field {
            return Ok((self.clone(), other.clone()));
        }
        if self.field.is_rational() {
            return Ok((other.field.rat(self.coeffs[0].clone()), other.clone()));
        }
        if other.field.is_rational() {
            return Ok((self.clone(), self.field.rat(other.coeffs[0].clone())));
        }
        Err(NumericError::FieldMismatch(
            self.field.label().to_string(),
            other.field.label().to_string(),
        ))
    }

    pub fn checked_add(&self, other: &AlgNum) -> Result<AlgNum, NumericError> {
        let (a, b) = self.align(other)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(AlgNum {
            field: a.field,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &AlgNum) -> Result<AlgNum, NumericError> {
        let (a, b) = self.align(other)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Ok(AlgNum {
            field: a.field,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &AlgNum) -> Result<AlgNum, NumericError> {
        let (a, b) = self.align(other)?;
        if a.field.degree() == 1 {
            return Ok(AlgNum {
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
                field: a.field,
            });
        }
        let prod = poly_mul(&a.coeffs, &b.coeffs);
        Ok(AlgNum::from_power_basis(&a.field, prod))
    }

    pub fn checked_div(&self, other: &AlgNum) -> Result<AlgNum, NumericError> {
        let (a, b) = self.align(other)?;
        let inv = b.inverse()?;
        a.checked_mul(&inv)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the minimal polynomial.
    pub fn inverse(&self) -> Result<AlgNum, NumericError> {
        if self.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(AlgNum {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Invariant: s * self = r (mod m).
        let mut r0 = self.field.minpoly().to_vec();
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let q = poly_quo(&r0, &r1);
            let r2 = poly_rem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // A common factor with the minimal polynomial: only possible if it is reducible.
                return Err(NumericError::NotInvertible);
            }
        }
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.into_iter().map(|x| x * &c).collect();
        Ok(AlgNum::from_power_basis(&self.field, s))
    }

    pub fn pow(&self, n: u32) -> AlgNum {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Image under the homomorphism sending the generator to `image_of_generator`.
    pub fn embed(
        &self,
        target: &NumberField,
        image_of_generator: &AlgNum,
    ) -> Result<AlgNum, NumericError> {
        if image_of_generator.field != *target && !image_of_generator.field.is_rational() {
            return Err(NumericError::FieldMismatch(
                image_of_generator.field.label().to_string(),
                target.label().to_string(),
            ));
        }
        let img = image_of_generator.align(&target.zero())?.0;
        let horner = |coeffs: &[Rational]| {
            coeffs
                .iter()
                .rev()
                .fold(target.zero(), |acc, c| &(&acc * &img) + &target.rat(c.clone()))
        };
        if !horner(self.field.minpoly()).is_zero() {
            return Err(NumericError::NotARoot);
        }
        Ok(horner(&self.coeffs))
    }

    /// Reinterprets the coefficients in a field of the same degree.
    pub fn promote(&self, target: &NumberField) -> Result<AlgNum, NumericError> {
        self.align(&target.zero()).map(|(a, _)| a)
    }

    /// Negative when the value is a negative rational; used for sign-aware printing.
    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_negative())
    }
}

impl PartialEq for AlgNum {
    fn eq(&self, other: &Self) -> bool {
        match self.align(other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl Eq for AlgNum {}

impl PartialOrd for AlgNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: rationals by value, then by the remaining power-basis coefficients.
impl Ord for AlgNum {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints as a polynomial in the generator, highest power first, e.g. `2*a - 1/3`.
impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.field.generator_symbol();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => g.to_string(),
                _ => format!("{g}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&abs), mono));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&AlgNum> for &AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: &AlgNum) -> AlgNum {
                self.$checked(rhs).expect(concat!("AlgNum ", stringify!($method)))
            }
        }
        impl $tr<AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: AlgNum) -> AlgNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&AlgNum> for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: &AlgNum) -> AlgNum {
                (&self).$method(rhs)
            }
        }
    };
}

// The operator forms panic on mismatched fields or division by zero; use the
// `checked_*` methods where that can happen.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        -&self
    }
}
