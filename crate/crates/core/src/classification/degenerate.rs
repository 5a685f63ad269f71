use serde::Serialize;

use crate::foliation::{is_invariant_line, local_invariants, Line, ProjFoliation, ProjPoint, XY};
use crate::homogeneous::{points_at_infinity, squarefree_form, HomError, HomFoliation};
use crate::numeric::AlgNum;
use crate::polynomial::gcd::gcd_all;

use super::ClassError;

/// Local data compared at one point of `Sing F` on the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationPoint {
    /// The point in the original coordinates.
    pub point: ProjPoint,
    /// The same point in the coordinates where the line is `z = 0`.
    pub moved: ProjPoint,
    pub tau: u32,
    pub hom_tau: u32,
    pub hom_mu: u32,
    pub cs: Option<AlgNum>,
    pub hom_cs: Option<AlgNum>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DegenerationChecks {
    /// The line is invariant by the homogeneous foliation.
    pub line_invariant: bool,
    /// Both foliations have the same singular points on the line.
    pub same_points: bool,
    /// Every such point is a simple singularity of the homogeneous foliation.
    pub milnor_one: bool,
    pub same_tau: bool,
    pub same_cs: bool,
    /// `tau(F, s) <= tau(H, s)` at every point.
    pub tau_bounded: bool,
    /// `sum (tau(H, s) - 1) = 2d - 2` over the line.
    pub hom_tau_total: bool,
}

impl DegenerationChecks {
    pub fn all(&self) -> bool {
        self.line_invariant
            && self.same_points
            && self.milnor_one
            && self.same_tau
            && self.same_cs
            && self.tau_bounded
            && self.hom_tau_total
    }
}

#[derive(Clone, Debug)]
pub struct DegenerationResult {
    pub line: Line,
    pub hom: HomFoliation,
    /// `old = transform * new`, the new coordinates having the line at `z = 0`.
    pub transform: Vec<Vec<AlgNum>>,
    pub points: Vec<DegenerationPoint>,
    pub checks: DegenerationChecks,
}

// Coordinates (X, Y, Z) = (x_i, x_j, l(x)) where k is the last index with l_k != 0.
fn moving_line_to_infinity(line: &Line) -> Vec<Vec<AlgNum>> {
    let l = line.coeffs();
    let field = line.field();
    let k = (0..3).rev().find(|&k| !l[k].is_zero()).expect("nonzero line");
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let inv = l[k].inverse().expect("nonzero");
    let mut m = vec![vec![field.zero(); 3]; 3];
    m[others[0]][0] = field.one();
    m[others[1]][1] = field.one();
    m[k][0] = -&(&l[others[0]] * &inv);
    m[k][1] = -&(&l[others[1]] * &inv);
    m[k][2] = inv;
    m
}

fn apply(m: &[Vec<AlgNum>], p: &ProjPoint) -> ProjPoint {
    let c = p.coords();
    let row = |i: usize| (0..3).fold(p.field().zero(), |acc, j| &acc + &(&m[i][j] * &c[j]));
    ProjPoint::new(row(0), row(1), row(2)).expect("invertible transform")
}

/// Moves an invariant line to `z = 0` and keeps the top graded part of the affine form in
/// `z = 1`, giving a homogeneous foliation; then compares the singular points on the line.
pub fn degenerate_along_line(f: &ProjFoliation, line: &Line) -> Result<DegenerationResult, ClassError> {
    let field = crate::foliation::larger_field(f.field(), line.field())?;
    let f = f.promote(&field)?;
    let line = Line::new(
        line.coeffs()[0].promote(&field)?,
        line.coeffs()[1].promote(&field)?,
        line.coeffs()[2].promote(&field)?,
    )?;
    if !is_invariant_line(&f, &line) {
        return Err(ClassError::NotInvariant(line.to_string()));
    }
    let d = f.degree();
    let m = moving_line_to_infinity(&line);
    let moved = f.linear_pullback(&m)?;
    let (a, b) = moved.affine_form();
    let hom = match HomFoliation::new(a.homogeneous_part(d), b.homogeneous_part(d)) {
        Ok(h) => h,
        Err(HomError::CommonFactor(g)) => return Err(ClassError::CommonFactorInTopPart(g)),
        Err(e) => return Err(e.into()),
    };
    let hf = hom.foliation();
    let infinity = Line::infinity(&field);

    let on_line = |p: &crate::polynomial::MPoly| p.specialize(2, &field.zero()).restrict_vars(&XY);
    let restricted = [on_line(moved.a())?, on_line(moved.b())?, on_line(moved.c())?];
    let common = gcd_all(restricted.iter()).expect("three forms");
    let same_points = squarefree_form(&common) == squarefree_form(&hom.cone());

    let mut points = Vec::new();
    for s in points_at_infinity(&hom)? {
        let moved_point = s.point_at_infinity(&field);
        let point = apply(&m, &moved_point);
        let mine = local_invariants(&f, &point, std::slice::from_ref(&line))?;
        let theirs = local_invariants(&hf, &moved_point, std::slice::from_ref(&infinity))?;
        points.push(DegenerationPoint {
            point,
            moved: moved_point,
            tau: mine.tau,
            hom_tau: theirs.tau,
            hom_mu: theirs.mu,
            cs: mine.cs_along(&line).ok(),
            hom_cs: theirs.cs_along(&infinity).ok(),
        });
    }
    let checks = DegenerationChecks {
        line_invariant: is_invariant_line(&hf, &infinity),
        same_points,
        milnor_one: points.iter().all(|p| p.hom_mu == 1),
        same_tau: points.iter().all(|p| p.tau == p.hom_tau),
        same_cs: points.iter().all(|p| p.cs.is_some() && p.cs == p.hom_cs),
        tau_bounded: points.iter().all(|p| p.tau <= p.hom_tau),
        hom_tau_total: points.iter().map(|p| p.hom_tau - 1).sum::<u32>() == 2 * hom.degree() - 2,
    };
    Ok(DegenerationResult {
        line,
        hom,
        transform: m,
        points,
        checks,
    })
}
