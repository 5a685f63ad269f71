use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::numeric::{AlgNum, NumberField, Rational};

use super::PolyError;

/// Exponent vector, ordered graded-lexicographically with the first variable largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial over a number field in a named, ordered set of variables.
#[derive(Clone)]
pub struct MPoly {
    field: NumberField,
    vars: Vec<char>,
    terms: BTreeMap<Monomial, AlgNum>,
}

impl MPoly {
    pub fn zero(field: &NumberField, vars: &[char]) -> Self {
        MPoly {
            field: field.clone(),
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &NumberField, vars: &[char], c: AlgNum) -> Self {
        let mut p = Self::zero(field, vars);
        if !c.is_zero() {
            let c = c.promote(field).expect("constant from a foreign field");
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(field: &NumberField, vars: &[char]) -> Self {
        Self::constant(field, vars, field.one())
    }

    /// The polynomial consisting of the variable named `name`.
    pub fn var(field: &NumberField, vars: &[char], name: char) -> Result<Self, PolyError> {
        let i = vars
            .iter()
            .position(|&v| v == name)
            .ok_or(PolyError::UnknownVariable(name))?;
        Ok(Self::var_at(field, vars, i))
    }

    pub fn var_at(field: &NumberField, vars: &[char], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(field, vars, field.one(), e)
    }

    pub fn monomial(field: &NumberField, vars: &[char], c: AlgNum, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut p = Self::zero(field, vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c.promote(field).expect("foreign coefficient"));
        }
        p
    }

    pub fn from_terms(
        field: &NumberField,
        vars: &[char],
        terms: impl IntoIterator<Item = (Vec<u32>, AlgNum)>,
    ) -> Self {
        let mut p = Self::zero(field, vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity");
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(field: &NumberField, vars: &[char], terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            field,
            vars,
            terms.iter().map(|(c, e)| (e.to_vec(), field.int(*c))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: AlgNum) {
        if c.is_zero() {
            return;
        }
        let c = c.promote(&self.field).expect("foreign coefficient");
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: char) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|&v| v == name)
            .ok_or(PolyError::UnknownVariable(name))
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &AlgNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn coefficient(&self, exps: &[u32]) -> AlgNum {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> AlgNum {
        self.coefficient(&vec![0; self.nvars()])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Lowest total degree of a term; `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &AlgNum)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> AlgNum {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        self.filter_terms(|m| m.degree() == k)
    }

    /// Terms of total degree at most `k`.
    pub fn truncate(&self, k: u32) -> MPoly {
        self.filter_terms(|m| m.degree() <= k)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> MPoly {
        MPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn same_ring(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch(
                self.vars.iter().collect(),
                other.vars.iter().collect(),
            ));
        }
        if self.field != other.field && !self.field.is_rational() && !other.field.is_rational() {
            return Err(PolyError::FieldMismatch(
                self.field.label().to_string(),
                other.field.label().to_string(),
            ));
        }
        Ok(())
    }

    // The larger of the two fields when one side is rational.
    fn joint_field(&self, other: &MPoly) -> NumberField {
        if self.field.is_rational() {
            other.field.clone()
        } else {
            self.field.clone()
        }
    }

    /// Reinterprets a polynomial over the rationals in a larger field.
    pub fn promote(&self, field: &NumberField) -> Result<MPoly, PolyError> {
        if self.field == *field {
            return Ok(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.promote(field)?);
        }
        Ok(MPoly {
            field: field.clone(),
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(other)?;
        let mut out = self.promote(&self.joint_field(other))?;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(other)?;
        let mut out = self.promote(&self.joint_field(other))?;
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_ring(other)?;
        let mut out = MPoly::zero(&self.joint_field(other), &self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &AlgNum) -> MPoly {
        let field = if self.field.is_rational() {
            c.field().clone()
        } else {
            self.field.clone()
        };
        let mut out = MPoly::zero(&field, &self.vars);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.clone(), x * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> MPoly {
        self.scale(&self.field.rat(q.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(&self.field, &self.vars);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the variable at index `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(&self.field, &self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * &self.field.int(e as i64));
        }
        out
    }

    pub fn derivative_by(&self, name: char) -> Result<MPoly, PolyError> {
        Ok(self.derivative(self.var_index(name)?))
    }

    pub fn evaluate(&self, point: &[AlgNum]) -> Result<AlgNum, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::ArityMismatch(self.nvars(), point.len()));
        }
        let mut field = self.field.clone();
        for p in point {
            if field.is_rational() && !p.field().is_rational() {
                field = p.field().clone();
            }
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.0.iter().zip(point) {
                if *e > 0 {
                    t = t.checked_mul(&x.pow(*e))?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for the `i`-th variable; the images share a ring.
    pub fn compose(&self, images: &[MPoly]) -> Result<MPoly, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::ArityMismatch(self.nvars(), images.len()));
        }
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(Vec::new);
        let mut field = self.field.clone();
        for im in images {
            if im.vars != target_vars {
                return Err(PolyError::VariableMismatch(
                    target_vars.iter().collect(),
                    im.vars.iter().collect(),
                ));
            }
            if field.is_rational() {
                field = im.field.clone();
            }
        }
        // Cache powers of each image.
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|im| vec![MPoly::one(&field, &target_vars), im.promote(&field).unwrap_or_else(|_| im.clone())])
            .collect();
        let mut out = MPoly::zero(&field, &target_vars);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&field, &target_vars, c.promote(&field)?);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e as usize])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Replaces one variable by a polynomial in the same ring.
    pub fn substitute(&self, i: usize, value: &MPoly) -> Result<MPoly, PolyError> {
        let images: Vec<MPoly> = (0..self.nvars())
            .map(|j| {
                if j == i {
                    value.clone()
                } else {
                    MPoly::var_at(&self.field, &self.vars, j)
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Sets the variable at index `i` to a constant (the variable stays in the ring).
    pub fn specialize(&self, i: usize, value: &AlgNum) -> MPoly {
        let mut out = MPoly::zero(&self.field, &self.vars);
        let mut powers = vec![self.field.one()];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out.add_term(m2, c * &powers[e]);
        }
        out
    }

    /// Shifts every variable: `p(v_1 + s_1, ..., v_n + s_n)`.
    pub fn translate(&self, shift: &[AlgNum]) -> Result<MPoly, PolyError> {
        let field = self.field.clone();
        let images: Vec<MPoly> = (0..self.nvars())
            .map(|j| {
                let v = MPoly::var_at(&field, &self.vars, j);
                v.checked_add(&MPoly::constant(&field, &self.vars, shift[j].clone()))
            })
            .collect::<Result<_, _>>()?;
        self.compose(&images)
    }

    /// Coefficients as a polynomial in the variable at index `i` (lowest power first).
    pub fn to_univariate(&self, i: usize) -> Vec<MPoly> {
        let deg = self.degree_in(i) as usize;
        let mut out = vec![MPoly::zero(&self.field, &self.vars); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            out[e].terms.insert(m2, c.clone());
        }
        out
    }

    pub fn from_univariate(i: usize, coeffs: &[MPoly], field: &NumberField, vars: &[char]) -> MPoly {
        let mut out = MPoly::zero(field, vars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut m2 = m.clone();
                m2.0[i] += e as u32;
                out.add_term(m2, x.clone());
            }
        }
        out
    }

    /// Multivariate division by a single divisor; the remainder is zero exactly when `q` divides `self`.
    pub fn div_rem(&self, q: &MPoly) -> Result<(MPoly, MPoly), PolyError> {
        self.same_ring(q)?;
        let (lm, lc) = match q.leading_term() {
            None => return Err(PolyError::DivisionByZeroPoly),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let lc_inv = lc.inverse()?;
        let field = self.joint_field(q);
        let mut p = self.promote(&field)?;
        let mut quot = MPoly::zero(&field, &self.vars);
        let mut rem = MPoly::zero(&field, &self.vars);
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient(&m);
                let qc = &c * &lc_inv;
                for (m2, c2) in &q.terms {
                    p.add_term(m2.mul(&qm), -(&qc * c2));
                }
                // Guard against rounding-free but representation-level leftovers.
                p.terms.remove(&m);
                quot.add_term(qm, qc);
            } else {
                p.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
        Ok((quot, rem))
    }

    pub fn exact_divide(&self, q: &MPoly) -> Result<MPoly, PolyError> {
        let (quot, rem) = self.div_rem(q)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    pub fn divides(&self, p: &MPoly) -> Result<bool, PolyError> {
        Ok(p.div_rem(self)?.1.is_zero())
    }

    /// Scales so the graded-lex leading coefficient is 1 (zero stays zero).
    pub fn normalize(&self) -> MPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Moves the polynomial into a ring whose variables include all of the current ones.
    pub fn with_vars(&self, new_vars: &[char]) -> Result<MPoly, PolyError> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                new_vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or(PolyError::UnknownVariable(*v))
            })
            .collect::<Result<_, _>>()?;
        let mut out = MPoly::zero(&self.field, new_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_vars.len()];
            for (k, &j) in map.iter().enumerate() {
                e[j] = m.0[k];
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Drops variables that do not occur; fails if a dropped variable occurs.
    pub fn restrict_vars(&self, new_vars: &[char]) -> Result<MPoly, PolyError> {
        let mut out = MPoly::zero(&self.field, new_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; new_vars.len()];
            for (k, v) in self.vars.iter().enumerate() {
                match new_vars.iter().position(|w| w == v) {
                    Some(j) => e[j] = m.0[k],
                    None if m.0[k] == 0 => {}
                    None => return Err(PolyError::UnknownVariable(*v)),
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same exponents, variables renamed positionally.
    pub fn rename(&self, new_vars: &[char]) -> MPoly {
        assert_eq!(new_vars.len(), self.nvars());
        MPoly {
            field: self.field.clone(),
            vars: new_vars.to_vec(),
            terms: self.terms.clone(),
        }
    }

    /// Multiplies every term up to total degree `target` with powers of the new variable `h`.
    pub fn homogenize(&self, h: char, target: u32) -> Result<MPoly, PolyError> {
        let deg = self.total_degree().unwrap_or(0);
        if target < deg {
            return Err(PolyError::DegreeTooSmall(target, deg));
        }
        let mut vars = self.vars.clone();
        vars.push(h);
        let mut out = MPoly::zero(&self.field, &vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.push(target - m.degree());
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Sets the named variable to 1 and removes it from the ring.
    pub fn dehomogenize(&self, h: char) -> Result<MPoly, PolyError> {
        let i = self.var_index(h)?;
        let vars: Vec<char> = self.vars.iter().copied().filter(|&v| v != h).collect();
        let mut out = MPoly::zero(&self.field, &vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(i);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub fn map_coefficients(&self, f: impl Fn(&AlgNum) -> AlgNum, field: &NumberField) -> MPoly {
        let mut out = MPoly::zero(field, &self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((m1, c1), (m2, c2))| m1 == m2 && c1 == c2)
    }
}

impl Eq for MPoly {}

/// Canonical order: by leading terms downward (monomial, then coefficient).
impl Ord for MPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((m1, c1)), Some((m2, c2))) => {
                    let o = m1.cmp(m2).then_with(|| c1.cmp(c2));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for MPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_monomial(out: &mut String, vars: &[char], m: &Monomial) {
    let mut first = true;
    for (v, &e) in vars.iter().zip(&m.0) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push(*v);
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
}

// A coefficient that prints as a single signed term needs no parentheses.
fn single_term(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.contains(" + ") && !body.contains(" - ")
}

/// Canonical text form: terms in descending graded-lex order, e.g. `x*y^4 - x^4*y`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (neg, body) = if single_term(&cs) {
                match cs.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, cs.clone()),
                }
            } else {
                (false, format!("({cs})"))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let constant = m.degree() == 0;
            if constant {
                out.push_str(&body);
            } else {
                if body != "1" {
                    out.push_str(&body);
                    out.push('*');
                }
                write_monomial(&mut out, &self.vars, m);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs).expect(concat!("MPoly ", stringify!($method)))
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
    };
}

// Operator forms panic on mismatched rings; the `checked_*` methods report it instead.
poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}
