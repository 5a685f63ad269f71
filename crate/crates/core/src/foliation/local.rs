use crate::numeric::{AlgNum, NumberField};
use crate::polynomial::MPoly;

use super::form::ProjFoliation;
use super::inflection::is_invariant_line;
use super::milnor::milnor_number;
use super::point::{Chart, Line, ProjPoint};
use super::FoliationError;

/// Local coordinate names of every [`LocalVectorField`].
pub const UV: [char; 2] = ['u', 'v'];

/// The vector field `P d/du + Q d/dv` generating a foliation near a point, in chart
/// coordinates translated so the point is the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalVectorField {
    pub p: MPoly,
    pub q: MPoly,
    pub chart: Chart,
    pub center: ProjPoint,
}

/// A 2x2 matrix `[[du P, dv P], [du Q, dv Q]]`.
pub type Matrix2 = [[AlgNum; 2]; 2];

impl LocalVectorField {
    pub fn field(&self) -> &NumberField {
        if self.p.is_zero() {
            self.q.field()
        } else {
            self.p.field()
        }
    }

    pub fn is_singular(&self) -> bool {
        self.p.constant_term().is_zero() && self.q.constant_term().is_zero()
    }

    /// Terms of degree at most `k`.
    pub fn jet(&self, k: u32) -> (MPoly, MPoly) {
        (self.p.truncate(k), self.q.truncate(k))
    }

    pub fn linear_part(&self) -> Matrix2 {
        let d = |f: &MPoly, e: [u32; 2]| f.coefficient(&e);
        [
            [d(&self.p, [1, 0]), d(&self.p, [0, 1])],
            [d(&self.q, [1, 0]), d(&self.q, [0, 1])],
        ]
    }

    /// Lowest degree present in `P` or `Q`.
    pub fn vanishing_order(&self) -> u32 {
        [self.p.order(), self.q.order()]
            .into_iter()
            .flatten()
            .min()
            .unwrap_or(0)
    }

    /// `v P_k - u Q_k` for the homogeneous parts of degree `k`.
    pub fn radial_defect(&self, k: u32) -> MPoly {
        let f = self.field().clone();
        let u = MPoly::var_at(&f, &UV, 0);
        let v = MPoly::var_at(&f, &UV, 1);
        &(&v * &self.p.homogeneous_part(k)) - &(&u * &self.q.homogeneous_part(k))
    }
}

/// The local generator `X = B d/dx - A d/dy` of `A dx + B dy` in the first chart
/// containing `s`, centered at `s`.
pub fn local_vector_field(f: &ProjFoliation, s: &ProjPoint) -> Result<LocalVectorField, FoliationError> {
    let field = super::form::larger_field(f.field(), s.field())?;
    let f = f.promote(&field)?;
    let s = s.promote(&field)?;
    let chart = Chart::containing(&s);
    let (i, j, k) = chart.indices();
    let (s_i, s_j) = chart.local_coords(&s);
    let u = MPoly::var_at(&field, &UV, 0);
    let v = MPoly::var_at(&field, &UV, 1);
    let mut images = vec![MPoly::zero(&field, &UV); 3];
    images[i] = &u + &MPoly::constant(&field, &UV, s_i);
    images[j] = &v + &MPoly::constant(&field, &UV, s_j);
    images[k] = MPoly::one(&field, &UV);
    let coeffs = f.coefficients();
    let along_i = coeffs[i].compose(&images)?;
    let along_j = coeffs[j].compose(&images)?;
    Ok(LocalVectorField {
        p: along_j,
        q: -&along_i,
        chart,
        center: s,
    })
}

/// Eigenvalues of the linear part relative to one invariant line through the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineIndex {
    pub line: Line,
    pub eigen_along: AlgNum,
    pub eigen_transverse: AlgNum,
    /// Transverse over tangential eigenvalue; absent when the tangential eigenvalue is zero.
    pub cs: Option<AlgNum>,
    /// Equal eigenvalues with a linear part that is not a multiple of the identity.
    pub non_diagonalizable: bool,
}

/// Local invariants of a foliation at one singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub point: ProjPoint,
    pub chart: Chart,
    pub nu: u32,
    pub tau: u32,
    pub mu: u32,
    pub nondegenerate: bool,
    pub linear_part: Matrix2,
    /// `trace^2 / det` of the linear part at non-degenerate points.
    pub bb: Option<AlgNum>,
    pub lines: Vec<LineIndex>,
    /// Number of invariant lines supplied through the point.
    pub sigma: u32,
}

impl LocalData {
    pub fn is_radial(&self) -> bool {
        self.nu == 1 && self.tau >= 2
    }

    /// `n - 1` for a radial point of tangency order `n`.
    pub fn radial_order(&self) -> Option<u32> {
        self.is_radial().then(|| self.tau - 1)
    }

    pub fn index_along(&self, line: &Line) -> Option<&LineIndex> {
        self.lines.iter().find(|l| l.line == *line)
    }

    pub fn cs_along(&self, line: &Line) -> Result<AlgNum, FoliationError> {
        let idx = self
            .index_along(line)
            .ok_or_else(|| FoliationError::NotInvariantLine(line.to_string()))?;
        idx.cs
            .clone()
            .ok_or_else(|| FoliationError::ZeroEigenvalueAlongLine(line.to_string()))
    }
}

pub(crate) fn trace_det(m: &Matrix2) -> (AlgNum, AlgNum) {
    (
        &m[0][0] + &m[1][1],
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
    )
}

/// Tangency order: the least `k >= nu` at which the `k`-jet is not a multiple of the radial field.
pub fn tangency_order(x: &LocalVectorField, nu: u32, degree: u32) -> Result<u32, FoliationError> {
    (nu..=degree.max(nu))
        .find(|&k| !x.radial_defect(k).is_zero())
        .ok_or(FoliationError::TauExceedsDegree(degree))
}

fn line_index(x: &LocalVectorField, line: &Line) -> Result<LineIndex, FoliationError> {
    let m = x.linear_part();
    let (d0, d1) = line.direction_in(x.chart);
    // M d = lambda d.
    let md0 = &(&m[0][0] * &d0) + &(&m[0][1] * &d1);
    let md1 = &(&m[1][0] * &d0) + &(&m[1][1] * &d1);
    if !(&(&md0 * &d1) - &(&md1 * &d0)).is_zero() {
        return Err(FoliationError::NotInvariantLine(line.to_string()));
    }
    let along = if d0.is_zero() { &md1 / &d1 } else { &md0 / &d0 };
    let (trace, _) = trace_det(&m);
    let transverse = &trace - &along;
    let scalar = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
    let cs = (!along.is_zero()).then(|| &transverse / &along);
    Ok(LineIndex {
        line: line.clone(),
        non_diagonalizable: along == transverse && !scalar,
        eigen_along: along,
        eigen_transverse: transverse,
        cs,
    })
}

/// Computes `nu, tau, mu, BB` at `s` and the eigenvalue data along each supplied invariant line.
pub fn local_invariants(
    f: &ProjFoliation,
    s: &ProjPoint,
    lines: &[Line],
) -> Result<LocalData, FoliationError> {
    let x = local_vector_field(f, s)?;
    if !x.is_singular() {
        return Err(FoliationError::NotSingular(s.to_string()));
    }
    let nu = x.vanishing_order();
    let tau = tangency_order(&x, nu, f.degree())?;
    let mu = milnor_number(&x.p, &x.q)?;
    let linear_part = x.linear_part();
    let (trace, det) = trace_det(&linear_part);
    let bb = (mu == 1).then(|| &(&trace * &trace) / &det);
    let mut indices = Vec::new();
    for line in lines {
        if !line.contains(&x.center) {
            return Err(FoliationError::LineMissesPoint(line.to_string(), s.to_string()));
        }
        if !is_invariant_line(f, line) {
            return Err(FoliationError::NotInvariantLine(line.to_string()));
        }
        indices.push(line_index(&x, line)?);
    }
    Ok(LocalData {
        point: x.center.clone(),
        chart: x.chart,
        nu,
        tau,
        mu,
        nondegenerate: mu == 1,
        linear_part,
        bb,
        sigma: lines.len() as u32,
        lines: indices,
    })
}
