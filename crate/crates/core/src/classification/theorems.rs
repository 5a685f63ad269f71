use std::error::Error;

use crate::foliation::{is_convex, ProjFoliation, XY};
use crate::homogeneous::{catalog, is_convex_hom, CatalogName, HomFoliation};
use crate::numeric::{AlgNum, NumberField};
use crate::polynomial::{roots_in_field, AffineMap, MPoly, UPoly};
use crate::text::{parse_field, parse_polynomial};

use super::degenerate::{degenerate_along_line, DegenerationResult};
use super::lines::{invariant_lines, reduced_convex_report};
use super::report::Report;
use super::table::{classify_convex, cs_coefficients, table1, ClassMatch};
use super::ClassError;

type Outcome = Result<(bool, String), Box<dyn Error>>;

/// A field over which both the type and the Camacho–Sad polynomial of the row's
/// representative can be computed.
pub fn table_fields(row: usize) -> NumberField {
    match row {
        3 => NumberField::quadratic(13, 's').expect("13 is not a square"),
        4 => NumberField::quadratic(5, 's').expect("5 is not a square"),
        _ => NumberField::cube_roots_of_unity('w'),
    }
}

fn representative(row: usize) -> Result<HomFoliation, ClassError> {
    let entry = catalog(CatalogName::Omega(row as u8), &table_fields(row))?;
    Ok(entry.hom.expect("homogeneous"))
}

/// `scalar * phi^* (a, b) == (target_a, target_b)`.
fn pullback_matches(phi: AffineMap, form: [MPoly; 2], target: [MPoly; 2]) -> Outcome {
    let pulled = phi.scaled_pullback_form(&form)?;
    let ok = pulled == target;
    let detail = if ok {
        String::new()
    } else {
        format!("got {} dx + {} dy", pulled[0], pulled[1])
    };
    Ok((ok, detail))
}

/// The fourth form as the pullback of `y^3 (2y + 3cy - 4cx - 3x) dx + x^3 (y + cx) dy`
/// by `(2x, 8cy)`, scaled by `(3c + 2) / 2`, where `c` is the root `(-3 + sign * sqrt 5) / 8`.
pub fn omega4_pullback_identity(sign: i64) -> Outcome {
    let k = NumberField::quadratic(5, 's')?;
    let c = &(&(&k.generator() * &k.int(sign)) - &k.int(3)) / &k.int(8);
    let vars = ['x', 'y', 'c'];
    let a = parse_polynomial("y^3 (2y + 3c y - 4c x - 3x)", &k, &vars)?;
    let b = parse_polynomial("x^3 (y + c x)", &k, &vars)?;
    let at_c = |p: &MPoly| p.specialize(2, &c).restrict_vars(&XY);
    let phi = AffineMap::linear(vec![vec![k.int(2), k.zero()], vec![k.zero(), &c * &k.int(8)]])?
        .with_scalar(&(&(&c * &k.int(3)) + &k.int(2)) / &k.int(2));
    let target = catalog(CatalogName::Omega(4), &k)?;
    pullback_matches(phi, [at_c(&a)?, at_c(&b)?], [target.a, target.b])
}

/// The fifth form as `(1 - a) / (a - 2)^3` times the pullback of
/// `y^2 (6a x^2 - 4(a + 1) x y + 3y^2) dx - (2a - 1) x^4 dy` by `((a - 2) x, y)`, `a^2 - a + 1 = 0`.
pub fn omega5_pullback_identity() -> Outcome {
    let k = parse_field("Q(a): a^2 - a + 1 = 0")?;
    let alpha = k.generator();
    let a = parse_polynomial("y^2 (6a x^2 - 4(a + 1) x y + 3y^2)", &k, &XY)?;
    let b = parse_polynomial("-(2a - 1) x^4", &k, &XY)?;
    let shifted = &alpha - &k.int(2);
    let scalar = &(&k.one() - &alpha) / &shifted.pow(3);
    let phi = AffineMap::linear(vec![vec![shifted, k.zero()], vec![k.zero(), k.one()]])?.with_scalar(scalar);
    let target = catalog(CatalogName::Omega(5), &k)?;
    pullback_matches(phi, [a, b], [target.a, target.b])
}

/// The Hesse form as a scaled affine pullback of the normal form reached at the end of the
/// uniqueness argument, with `gamma = y0 = z0 = 1` and `x0 = r`, `r^2 + r + 1 = 0`.
pub fn hesse_closing_identity() -> Outcome {
    let k = NumberField::cube_roots_of_unity('r');
    let r = k.generator();
    // g = gamma, u = y0, v = z0
    let vars = ['x', 'y', 'g', 'u', 'v'];
    let parse = |s: &str| parse_polynomial(s, &k, &vars);
    let radial = parse("g (1 + 2u v (r + 1) x - 2v y)")?;
    let a = &parse("2g v^2 y^2 (u (r + 2) x - y) + g v^3 y^3 (y - 2u x)")?
        - &(&radial * &MPoly::var_at(&k, &vars, 1));
    let b = &parse("2g u v^2 x^2 (u r x - (2r + 1) y) + g u^2 v^3 x^3 (2y - u x)")?
        + &(&radial * &MPoly::var_at(&k, &vars, 0));
    let params = |p: &MPoly| -> Result<MPoly, Box<dyn Error>> {
        let mut q = p.clone();
        for i in 2..5 {
            q = q.specialize(i, &k.one());
        }
        Ok(q.restrict_vars(&XY)?)
    };
    let third = |n: AlgNum| &n / &k.int(3);
    let r2 = &r + &k.int(2);
    let twice_r1 = &(&r * &k.int(2)) + &k.one();
    let matrix = vec![
        vec![third(-&r2), third(-&r2)],
        vec![third(&r - &k.one()), third(-&twice_r1)],
    ];
    let translation = vec![third(twice_r1.clone()), third(r2.clone())];
    let scalar = &k.int(9) / &(&r - &k.one());
    let phi = AffineMap::new(matrix, translation)?.with_scalar(scalar);
    let target = catalog(CatalogName::Hesse, &k)?;
    pullback_matches(phi, [params(&a)?, params(&b)?], [target.a, target.b])
}

/// Convexity by the discriminant and by the inflection curve, types, Camacho–Sad polynomials,
/// distinct types, the displayed pullbacks and the degree-four member of the family.
pub fn verify_theorem_a() -> Report {
    let mut report = Report::new("five convex homogeneous foliations of degree four");
    let rows = table1();
    for row in &rows {
        let i = row.index;
        report.record(format!("omega{i} convex"), (|| -> Outcome {
            let h = representative(i)?;
            let by_discriminant = is_convex_hom(&h)?;
            let by_inflection = is_convex(&h.foliation())?;
            Ok((
                h.degree() == 4 && by_discriminant && by_inflection,
                format!("degree {}, discriminant {by_discriminant}, inflection {by_inflection}", h.degree()),
            ))
        })());
    }
    for row in &rows {
        let i = row.index;
        report.record(format!("omega{i} type"), (|| -> Outcome {
            let t = crate::homogeneous::hom_type(&representative(i)?)?;
            Ok((t == row.hom_type, t.to_string()))
        })());
    }
    for row in &rows {
        let i = row.index;
        report.record(format!("omega{i} Camacho-Sad polynomial"), (|| -> Outcome {
            let h = representative(i)?;
            let cs = cs_coefficients(&h)?;
            let shown = crate::homogeneous::cs_polynomial(&h)?.to_string();
            Ok((cs.as_ref() == Some(&row.cs), shown))
        })());
    }
    report.record("row 3 roots", (|| -> Outcome {
        let h = representative(3)?;
        let p = UPoly::from_mpoly(&crate::homogeneous::cs_polynomial(&h)?, 0)?;
        let k = h.field().clone();
        let s = k.generator();
        let expected: Vec<AlgNum> = [1, -1]
            .iter()
            .map(|&e| -&(&(&k.int(13) + &(&s * &k.int(2 * e))) / &k.int(13)))
            .collect();
        let roots = roots_in_field(&p)?;
        let ok = expected
            .iter()
            .all(|r| roots.roots.iter().any(|(q, m)| q == r && *m == 1));
        let shown: Vec<String> = roots.roots.iter().map(|(q, m)| format!("{q}^{m}")).collect();
        Ok((ok, shown.join(", ")))
    })());
    report.record("types pairwise distinct", (|| -> Outcome {
        let mut types = Vec::new();
        for row in &rows {
            types.push(crate::homogeneous::hom_type(&representative(row.index)?)?);
        }
        let mut sorted = types.clone();
        sorted.sort();
        sorted.dedup();
        Ok((sorted.len() == types.len(), format!("{} distinct", sorted.len())))
    })());
    report.record("omega4 pullback, c = (-3 + sqrt 5)/8", omega4_pullback_identity(1));
    report.record("omega4 pullback, c = (-3 - sqrt 5)/8", omega4_pullback_identity(-1));
    report.record("omega5 pullback", omega5_pullback_identity());
    report.record("omega3(4,1) is omega3", (|| -> Outcome {
        let q = NumberField::rationals();
        let family = catalog(CatalogName::Omega3Family { degree: 4, nu: 1 }, &q)?;
        let fixed = catalog(CatalogName::Omega(3), &q)?;
        Ok((family.a == fixed.a && family.b == fixed.b, String::new()))
    })());
    report
}

/// Every invariant line of `f` with its degeneration and the table rows it matches.
pub fn degenerations(
    f: &ProjFoliation,
    field: &NumberField,
) -> Result<Vec<(DegenerationResult, ClassMatch)>, ClassError> {
    let inv = invariant_lines(f, field)?;
    let mut out = Vec::new();
    for line in &inv.lines {
        let result = degenerate_along_line(&inv.foliation, line)?;
        let class = classify_convex(&result.hom)?;
        out.push((result, class));
    }
    Ok(out)
}

fn fermat_and_hesse(field: &NumberField) -> Result<[(String, ProjFoliation); 2], ClassError> {
    Ok([
        ("fermat(4)".to_string(), catalog(CatalogName::Fermat(4), field)?.foliation),
        ("hesse".to_string(), catalog(CatalogName::Hesse, field)?.foliation),
    ])
}

fn collinear(p: &[AlgNum; 3], q: &[AlgNum; 3], r: &[AlgNum; 3]) -> bool {
    let minor = |i: usize, j: usize| &(&q[i] * &r[j]) - &(&q[j] * &r[i]);
    let det = &(&(&p[0] * &minor(1, 2)) - &(&p[1] * &minor(0, 2))) + &(&p[2] * &minor(0, 1));
    det.is_zero()
}

/// The computable steps of the reduced convex classification in degree four.
pub fn verify_theorem_b_support() -> Report {
    let mut report = Report::new("reduced convex foliations of degree four");
    let field = NumberField::cube_roots_of_unity('w');
    let pair = match fermat_and_hesse(&field) {
        Ok(p) => p,
        Err(e) => {
            report.push("catalog", false, format!("error: {e}"));
            return report;
        }
    };
    for (name, f) in &pair {
        report.record(format!("{name} reduced convex"), (|| -> Outcome {
            let r = reduced_convex_report(f, &field)?;
            let detail = format!(
                "{} lines, sum mu {}, sum BB {}",
                r.line_count,
                r.milnor_total,
                r.bb_total.as_ref().map(|b| b.to_string()).unwrap_or_else(|| "undefined".into())
            );
            Ok((r.all_ok(), detail))
        })());
    }
    for (name, f) in &pair {
        report.record(format!("{name} degenerations"), (|| -> Outcome {
            let all = degenerations(f, &field)?;
            let mut counts = [0usize; 5];
            let mut ok = all.len() == 12;
            for (result, class) in &all {
                match class.unique() {
                    Some(i) => counts[i - 1] += 1,
                    None => ok = false,
                }
                ok &= result.checks.all() && class.hom_type.is_convex();
            }
            let detail = counts
                .iter()
                .enumerate()
                .map(|(i, n)| format!("row {}: {n}", i + 1))
                .collect::<Vec<_>>()
                .join(", ");
            Ok((ok, detail))
        })());
    }
    for (name, f) in &pair {
        report.record(format!("{name} index pairing"), (|| -> Outcome {
            let r = reduced_convex_report(f, &field)?;
            let mut seen = 0;
            let mut ok = true;
            for p in r.points.iter().filter(|p| p.tau == 1 && p.lines.len() == 2) {
                seen += 1;
                let product = match (&p.lines[0].cs, &p.lines[1].cs) {
                    (Some(a), Some(b)) => a * b,
                    _ => field.zero(),
                };
                ok &= product.is_one();
            }
            Ok((ok && seen > 0, format!("{seen} points")))
        })());
    }
    report.record("fermat(4) non-aligned radial triple", (|| -> Outcome {
        let r = reduced_convex_report(&pair[0].1, &field)?;
        let radial: Vec<&[AlgNum; 3]> = r
            .points
            .iter()
            .filter(|p| p.radial_order() == Some(3))
            .map(|p| p.point.coords())
            .collect();
        let n = radial.len();
        let triple = (0..n).find_map(|i| {
            (i + 1..n).find_map(|j| {
                (j + 1..n)
                    .find(|&k| !collinear(radial[i], radial[j], radial[k]))
                    .map(|k| (i, j, k))
            })
        });
        Ok((triple.is_some(), format!("{n} radial points of order 3")))
    })());
    report.record("hesse closing identity", hesse_closing_identity());
    report
}
