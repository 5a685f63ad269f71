use std::fmt;

use super::mpoly::MPoly;

/// A formal product of normalized polynomial factors with positive multiplicities.
///
/// Scalars are ignored: two polynomials that differ by a nonzero constant have the same divisor.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Divisor {
    factors: Vec<(MPoly, u32)>,
}

impl Divisor {
    pub fn new() -> Self {
        Divisor { factors: Vec::new() }
    }

    /// Normalizes, merges equal factors and sorts. Constant factors are dropped.
    pub fn from_factors(items: impl IntoIterator<Item = (MPoly, u32)>) -> Self {
        let mut d = Divisor::new();
        for (p, e) in items {
            d.push(p, e);
        }
        d
    }

    pub fn push(&mut self, p: MPoly, e: u32) {
        if e == 0 || p.is_constant() {
            return;
        }
        let p = p.normalize();
        match self.factors.binary_search_by(|(f, _)| f.cmp(&p)) {
            Ok(i) => self.factors[i].1 += e,
            Err(i) => self.factors.insert(i, (p, e)),
        }
    }

    pub fn factors(&self) -> &[(MPoly, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn degree(&self) -> u32 {
        self.factors
            .iter()
            .map(|(p, e)| p.total_degree().unwrap_or(0) * e)
            .sum()
    }

    pub fn multiplicity(&self, p: &MPoly) -> u32 {
        let p = p.normalize();
        self.factors
            .iter()
            .find(|(f, _)| *f == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, e) in &other.factors {
            d.push(p.clone(), *e);
        }
        d
    }

    /// The normalized product, or `None` for the empty divisor (whose ring is unknown).
    pub fn product(&self) -> Option<MPoly> {
        let mut it = self.factors.iter();
        let (p0, e0) = it.next()?;
        let mut acc = p0.pow(*e0);
        for (p, e) in it {
            acc = &acc * &p.pow(*e);
        }
        Some(acc)
    }
}

/// Renders as `f1^e1 * f2 * ...`, with parentheses around multi-term factors; `1` when empty.
impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| {
                let base = if p.num_terms() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                };
                if *e > 1 {
                    format!("{base}^{e}")
                } else {
                    base
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}
