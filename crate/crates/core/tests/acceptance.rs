//! Acceptance suite. Runs without the test harness so that every criterion prints one line.

use std::process::ExitCode;

use foliations::classification::{
    classify_convex, degenerations, hesse_closing_identity, omega4_pullback_identity,
    omega5_pullback_identity, reduced_convex_report, table1, table_fields,
};
use foliations::foliation::{
    make_foliation, inflection_divisor, inflection_polynomial, is_convex, jacobian_nonzero, local_invariants,
    local_vector_field, milnor_number, singular_points, ProjFoliation, XY,
};
use foliations::homogeneous::{
    catalog, gmap_coherence, hom_invariants, hom_type, is_convex_hom, tangency_divisor_check,
    CatalogName,
};
use foliations::numeric::NumberField;
use foliations::polynomial::MPoly;
use foliations::text::parse_polynomial;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

type Outcome = Result<(bool, String), Box<dyn std::error::Error>>;

fn w() -> NumberField {
    NumberField::cube_roots_of_unity('w')
}

fn table_reproduction() -> Outcome {
    let mut ok = true;
    let mut types = Vec::new();
    for row in table1() {
        let k = table_fields(row.index);
        let h = catalog(row.representative, &k)?.hom.expect("homogeneous");
        let t = hom_type(&h)?;
        let m = classify_convex(&h)?;
        ok &= t == row.hom_type && m.cs.as_ref() == Some(&row.cs);
        types.push(t);
    }
    let n = types.len();
    types.sort();
    types.dedup();
    ok &= types.len() == n;
    Ok((ok, format!("{} rows, {} distinct types", n, types.len())))
}

fn worked_example() -> Outcome {
    let q = NumberField::rationals();
    let h = catalog(CatalogName::Example5, &q)?.hom.expect("homogeneous");
    let inv = hom_invariants(&h)?;
    let cone = parse_polynomial("x y (6x^4 - 10x^2 y^2 + y^4)", &q, &XY)?;
    let printed = parse_polynomial("150 x^2 y^4 (x - y) (x + y)", &q, &XY)?;
    let same_cone = inv.cone == cone;
    let same_polynomial = inv.discriminant == printed;
    let same_divisor = inv.discriminant.normalize() == printed.normalize();
    let t = hom_type(&h)?;
    let convex = is_convex_hom(&h)?;
    let ok = same_cone && same_divisor && t.to_string() == "1*R2 + 1*R4 + 2*T1" && !convex;
    let sign = if same_polynomial {
        "equal as polynomials".to_string()
    } else {
        format!("equal as divisors; the defining formula gives {}", inv.discriminant)
    };
    Ok((ok, format!("type {t}, non-convex, D_tr {sign}")))
}

fn pullbacks() -> Outcome {
    let results = [
        omega4_pullback_identity(1)?.0,
        omega4_pullback_identity(-1)?.0,
        omega5_pullback_identity()?.0,
        hesse_closing_identity()?.0,
    ];
    let n = results.iter().filter(|b| **b).count();
    Ok((n == results.len(), format!("{n}/4 identities")))
}

fn reduced_convex() -> Outcome {
    let k = w();
    let mut ok = true;
    let mut detail = Vec::new();
    for name in [CatalogName::Fermat(4), CatalogName::Hesse] {
        let f = catalog(name, &k)?.foliation;
        let r = reduced_convex_report(&f, &k)?;
        ok &= r.line_count == 12
            && r.points.len() == 21
            && r.lemma31_ok
            && r.milnor_total == 21
            && r.bb_total == Some(k.int(36))
            && r.cs_sums_are_one();
        detail.push(format!(
            "{name}: {} lines, {} points, sum mu {}, sum BB {}",
            r.line_count,
            r.points.len(),
            r.milnor_total,
            r.bb_total.map(|b| b.to_string()).unwrap_or_default()
        ));
    }
    Ok((ok, detail.join("; ")))
}

fn degeneration_suite() -> Outcome {
    let k = w();
    let mut ok = true;
    let mut count = 0;
    for name in [CatalogName::Fermat(4), CatalogName::Hesse] {
        let f = catalog(name, &k)?.foliation;
        for (result, class) in degenerations(&f, &k)? {
            count += 1;
            let c = &result.checks;
            ok &= is_convex_hom(&result.hom)?
                && class.rows.len() == 1
                && c.same_points
                && c.milnor_one
                && c.same_tau
                && c.same_cs;
        }
    }
    Ok((ok && count == 24, format!("{count} degenerations")))
}

fn tangency_identity() -> Outcome {
    let q = NumberField::rationals();
    let mut names: Vec<CatalogName> = (1..=5).map(CatalogName::Omega).collect();
    names.push(CatalogName::Example5);
    for (degree, nu) in [(4, 1), (5, 1), (5, 2)] {
        names.push(CatalogName::Omega3Family { degree, nu });
    }
    let mut ok = true;
    for name in &names {
        let h = catalog(*name, &q)?.hom.expect("homogeneous");
        ok &= tangency_divisor_check(&h)?.holds;
    }
    Ok((ok, format!("{} foliations", names.len())))
}

fn catalog_sweep() -> Vec<(CatalogName, NumberField)> {
    let mut out = Vec::new();
    for d in 2..=4 {
        for name in [
            CatalogName::Fermat(d),
            CatalogName::H0(d),
            CatalogName::H1(d),
            CatalogName::F1(d),
            CatalogName::F2(d),
        ] {
            out.push((name, w()));
        }
    }
    out.push((CatalogName::Hesse, w()));
    for i in 1..=5 {
        out.push((CatalogName::Omega(i), table_fields(i as usize)));
    }
    out.push((CatalogName::Example5, w()));
    out
}

fn euler_ok(f: &ProjFoliation) -> bool {
    f.euler_residual().is_zero()
}

fn small_poly(max_degree: u32) -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    proptest::collection::vec((-3i64..=3, 0..=max_degree, 0..=max_degree), 1..5)
}

fn to_poly(q: &NumberField, terms: &[(i64, u32, u32)]) -> MPoly {
    MPoly::from_terms(q, &XY, terms.iter().map(|&(c, i, j)| (vec![i, j], q.int(c))))
}

/// Euler identity, degree of the inflection curve and the Jacobian test on random foliations.
fn random_properties() -> Result<u32, TestCaseError> {
    let mut runner = TestRunner::new_with_rng(
        Config { cases: 24, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let q = NumberField::rationals();
    let checked = std::cell::Cell::new(0);
    runner
        .run(&(small_poly(2), small_poly(2)), |(a, b)| {
            let Ok(f) = make_foliation(&to_poly(&q, &a), &to_poly(&q, &b)) else {
                return Ok(());
            };
            prop_assert!(euler_ok(&f));
            if let Ok(i) = inflection_polynomial(&f) {
                prop_assert_eq!(i.total_degree(), Some(3 * f.degree()));
            }
            if let Ok(locus) = singular_points(&f, &q) {
                for p in &locus.points {
                    let x = local_vector_field(&f, p).unwrap();
                    let mu = milnor_number(&x.p, &x.q).unwrap();
                    prop_assert_eq!(mu == 1, jacobian_nonzero(&x.p, &x.q));
                }
            }
            checked.set(checked.get() + 1);
            Ok(())
        })
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    Ok(checked.get())
}

fn global_properties() -> Outcome {
    let mut ok = true;
    let mut failures = Vec::new();
    let mut coherent = 0;
    let sweep = catalog_sweep();
    for (name, k) in &sweep {
        let e = catalog(*name, k)?;
        let f = &e.foliation;
        let d = f.degree();
        let mut good = euler_ok(f);
        good &= inflection_polynomial(f)?.total_degree() == Some(3 * d);
        let locus = singular_points(f, k)?;
        let mut non_radial = false;
        for p in &locus.points {
            let x = local_vector_field(f, p)?;
            let mu = milnor_number(&x.p, &x.q)?;
            good &= (mu == 1) == jacobian_nonzero(&x.p, &x.q);
            non_radial |= !local_invariants(f, p, &[])?.is_radial();
        }
        good &= non_radial;
        if let Some(h) = &e.hom {
            let c = gmap_coherence(h)?;
            good &= c.holds();
            coherent += 1;
        }
        if !good {
            failures.push(name.to_string());
        }
        ok &= good;
    }
    let f2 = catalog(CatalogName::F2(4), &w())?.foliation;
    let f2_non_convex = !is_convex(&f2)? && !inflection_divisor(&f2)?.transverse_part.is_empty();
    ok &= f2_non_convex;
    let random = random_properties().map_err(|e| e.to_string())?;
    let detail = if failures.is_empty() {
        format!(
            "{} foliations, {} self-maps coherent, f2(4) non-convex, {random} random foliations",
            sweep.len(),
            coherent
        )
    } else {
        format!("failed on {}", failures.join(", "))
    };
    Ok((ok, detail))
}

fn oracle_equivalence() -> Outcome {
    let q = NumberField::rationals();
    let mut ok = true;
    for a in 1..=5u32 {
        for b in 1..=5u32 {
            let p = MPoly::monomial(&q, &XY, q.one(), vec![0, a]);
            let r = MPoly::monomial(&q, &XY, q.one(), vec![b, 0]);
            let mu = milnor_number(&p, &r)?;
            ok &= mu == a * b && (mu == 1) == jacobian_nonzero(&p, &r);
        }
    }
    Ok((ok, "25 monomial pairs".into()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table of types and Camacho-Sad polynomials", table_reproduction),
        ("worked degree-five example", worked_example),
        ("pullback identities", pullbacks),
        ("reduced convex certification", reduced_convex),
        ("degenerations along invariant lines", degeneration_suite),
        ("tangency divisor identity", tangency_identity),
        ("global properties on the catalog", global_properties),
        ("Milnor number oracles", oracle_equivalence),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (passed, detail) = match check() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        all &= passed;
        println!(
            "criterion {}: {} [{name}] {detail}",
            i + 1,
            if passed { "PASS" } else { "FAIL" }
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
