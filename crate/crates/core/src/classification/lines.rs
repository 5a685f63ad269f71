use std::collections::BTreeSet;

use crate::foliation::{
    inflection_divisor, is_invariant_line, larger_field, local_invariants, singular_points, FoliationError,
    Line, LocalData, ProjFoliation, ProjPoint, SingularLocus,
};
use crate::numeric::{AlgNum, NumberField};

use super::ClassError;

/// Invariant lines of a foliation over a field, with the singular points they pass through.
#[derive(Clone, Debug)]
pub struct LineInventory {
    pub foliation: ProjFoliation,
    /// Every line here has been checked with [`is_invariant_line`].
    pub lines: Vec<Line>,
    pub singular: SingularLocus,
    /// `sigma`: the number of listed lines through each singular point.
    pub incidence: Vec<(ProjPoint, u32)>,
    /// Invariant lines read off the inflection curve, the independent audit.
    pub divisor_lines: Vec<Line>,
    /// The two enumerations agree and the invariant part of the inflection curve is all lines.
    pub complete: bool,
}

impl LineInventory {
    pub fn lines_through(&self, p: &ProjPoint) -> Vec<Line> {
        self.lines.iter().filter(|l| l.contains(p)).cloned().collect()
    }

    pub fn sigma(&self, p: &ProjPoint) -> u32 {
        self.lines.iter().filter(|l| l.contains(p)).count() as u32
    }
}

/// Candidate lines join pairs of singular points or are coordinate lines; each is kept when it
/// is invariant. The result is audited against the linear factors of the inflection curve.
pub fn invariant_lines(f: &ProjFoliation, field: &NumberField) -> Result<LineInventory, ClassError> {
    let field = larger_field(f.field(), field)?;
    let f = f.promote(&field)?;
    let singular = singular_points(&f, &field)?;
    let mut candidates: BTreeSet<Line> = BTreeSet::new();
    for i in 0..3 {
        let mut c = [field.zero(), field.zero(), field.zero()];
        c[i] = field.one();
        let [a, b, cc] = c;
        candidates.insert(Line::new(a, b, cc)?);
    }
    for (i, p) in singular.points.iter().enumerate() {
        for q in &singular.points[i + 1..] {
            candidates.insert(Line::through(p, q)?);
        }
    }
    let lines: Vec<Line> = candidates
        .into_iter()
        .filter(|l| is_invariant_line(&f, l))
        .collect();
    let (divisor_lines, all_linear) = match inflection_divisor(&f) {
        Ok(d) => {
            let all_linear = d
                .invariant_part
                .factors()
                .iter()
                .all(|(p, _)| p.total_degree() == Some(1));
            let mut dl: Vec<Line> = d.invariant_lines().into_iter().map(|(l, _)| l).collect();
            dl.sort();
            (dl, all_linear)
        }
        Err(FoliationError::EveryLeafIsLinear) => (Vec::new(), false),
        Err(e) => return Err(e.into()),
    };
    let complete = all_linear && divisor_lines == lines;
    let incidence = singular
        .points
        .iter()
        .map(|p| (p.clone(), lines.iter().filter(|l| l.contains(p)).count() as u32))
        .collect();
    Ok(LineInventory {
        foliation: f,
        lines,
        singular,
        incidence,
        divisor_lines,
        complete,
    })
}

/// Line count, the count of lines through each singular point against its tangency order,
/// the global index sums and the Camacho–Sad sum along each line.
#[derive(Clone, Debug)]
pub struct ReducedConvexReport {
    pub degree: u32,
    pub line_count: usize,
    pub is_reduced_convex: bool,
    /// `sigma = tau + 1` at every singular point.
    pub lemma31_ok: bool,
    pub milnor_total: u32,
    /// Sum of `trace^2 / det`; absent when a point is degenerate.
    pub bb_total: Option<AlgNum>,
    /// `sum mu = d^2 + d + 1` and `sum BB = (d + 2)^2`.
    pub sums_ok: bool,
    /// Sum of the indices along each line; absent when an index is undefined.
    pub per_line_cs_sum: Vec<(Line, Option<AlgNum>)>,
    /// `sum_{s on l} (sigma(s) - 1) = 3d - 1` for every line.
    pub sigma_tally_ok: bool,
    pub points: Vec<LocalData>,
}

impl ReducedConvexReport {
    pub fn cs_sums_are_one(&self) -> bool {
        self.per_line_cs_sum
            .iter()
            .all(|(_, s)| s.as_ref().is_some_and(|v| v.is_one()))
    }

    pub fn all_ok(&self) -> bool {
        self.is_reduced_convex && self.lemma31_ok && self.sums_ok && self.sigma_tally_ok && self.cs_sums_are_one()
    }
}

pub fn reduced_convex_report(f: &ProjFoliation, field: &NumberField) -> Result<ReducedConvexReport, ClassError> {
    let inv = invariant_lines(f, field)?;
    if !inv.singular.is_complete() {
        return Err(ClassError::IncompleteData(format!(
            "singular points account for {} of {}",
            inv.singular.milnor_total(),
            inv.singular.expected_total
        )));
    }
    if !inv.complete {
        return Err(ClassError::IncompleteData("invariant lines not all found".into()));
    }
    let f = &inv.foliation;
    let d = f.degree();
    let field = f.field().clone();
    let mut points = Vec::new();
    for p in &inv.singular.points {
        points.push(local_invariants(f, p, &inv.lines_through(p))?);
    }
    let lemma31_ok = points.iter().all(|l| l.sigma == l.tau + 1);
    let milnor_total = inv.singular.milnor_total();
    let bb_total = points
        .iter()
        .try_fold(field.zero(), |acc, l| l.bb.as_ref().map(|b| &acc + b));
    let sums_ok = milnor_total == d * d + d + 1
        && bb_total.as_ref().is_some_and(|b| *b == field.int(((d + 2) * (d + 2)) as i64));
    let mut per_line_cs_sum = Vec::new();
    let mut sigma_tally_ok = true;
    for line in &inv.lines {
        let mut sum = Some(field.zero());
        let mut tally = 0;
        for l in points.iter().filter(|l| line.contains(&l.point)) {
            tally += l.sigma - 1;
            sum = match (sum, l.cs_along(line)) {
                (Some(s), Ok(c)) => Some(&s + &c),
                _ => None,
            };
        }
        sigma_tally_ok &= tally == 3 * d - 1;
        per_line_cs_sum.push((line.clone(), sum));
    }
    Ok(ReducedConvexReport {
        degree: d,
        line_count: inv.lines.len(),
        is_reduced_convex: inv.lines.len() as u32 == 3 * d,
        lemma31_ok,
        milnor_total,
        bb_total,
        sums_ok,
        per_line_cs_sum,
        sigma_tally_ok,
        points,
    })
}
