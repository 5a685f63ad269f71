use std::fmt;

use crate::polynomial::{linear_factors, MPoly};

use super::{hom_invariants, HomError, HomFoliation};

/// Counts of radial points at infinity and of transverse inflection lines, by order.
///
/// `r[k - 1]` is the number of radial singularities of order `k`; `t[k - 1]` the number of
/// transverse inflection lines of order `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomType {
    pub r: Vec<u32>,
    pub t: Vec<u32>,
}

impl HomType {
    pub fn new(degree: u32) -> Self {
        let n = degree.saturating_sub(1) as usize;
        HomType {
            r: vec![0; n],
            t: vec![0; n],
        }
    }

    /// Builds a type from `(order, count)` pairs.
    pub fn from_counts(degree: u32, radial: &[(u32, u32)], transverse: &[(u32, u32)]) -> Self {
        let mut out = HomType::new(degree);
        for &(k, n) in radial {
            out.add_radial(k, n);
        }
        for &(k, n) in transverse {
            out.add_transverse(k, n);
        }
        out
    }

    fn slot(v: &mut Vec<u32>, k: u32) -> &mut u32 {
        let i = k as usize - 1;
        if v.len() <= i {
            v.resize(i + 1, 0);
        }
        &mut v[i]
    }

    pub fn add_radial(&mut self, order: u32, count: u32) {
        *Self::slot(&mut self.r, order) += count;
        let n = self.r.len().max(self.t.len());
        self.t.resize(n, 0);
    }

    pub fn add_transverse(&mut self, order: u32, count: u32) {
        *Self::slot(&mut self.t, order) += count;
        let n = self.r.len().max(self.t.len());
        self.r.resize(n, 0);
    }

    /// `sum_k k (r_k + t_k)`, which equals `2d - 2`.
    pub fn weight(&self) -> u32 {
        let w = |v: &[u32]| -> u32 { v.iter().enumerate().map(|(i, n)| (i as u32 + 1) * n).sum() };
        w(&self.r) + w(&self.t)
    }

    pub fn radial_count(&self) -> u32 {
        self.r.iter().sum()
    }

    pub fn transverse_count(&self) -> u32 {
        self.t.iter().sum()
    }

    pub fn is_convex(&self) -> bool {
        self.transverse_count() == 0
    }
}

impl fmt::Display for HomType {
    /// `1*R2 + 1*R4 + 2*T1`: radial terms first, each family by increasing order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (letter, v) in [("R", &self.r), ("T", &self.t)] {
            for (i, n) in v.iter().enumerate() {
                if *n > 0 {
                    terms.push(format!("{n}*{letter}{}", i + 1));
                }
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// The type, read off the line factors of the discriminant: a line in the tangent cone is
/// the direction of a radial point at infinity, any other line is a transverse inflection line.
pub fn hom_type(h: &HomFoliation) -> Result<HomType, HomError> {
    let inv = hom_invariants(h)?;
    let lf = linear_factors(&inv.discriminant)?;
    if !lf.remainder.is_constant() {
        return Err(HomError::FactorOutsideField(lf.remainder.normalize().to_string()));
    }
    let mut out = HomType::new(h.degree());
    for (line, m) in lf.lines.factors() {
        if in_cone(line, &inv.cone)? {
            out.add_radial(*m, 1);
        } else {
            out.add_transverse(*m, 1);
        }
    }
    Ok(out)
}

fn in_cone(line: &MPoly, cone: &MPoly) -> Result<bool, HomError> {
    Ok(line.divides(cone)?)
}
