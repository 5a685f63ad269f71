use proptest::prelude::*;

use super::*;
use crate::foliation::{is_convex, local_invariants, XY};
use crate::numeric::{ratio, AlgNum, NumberField};
use crate::polynomial::{MPoly, UPoly};
use crate::text::parse_polynomial;

fn q() -> NumberField {
    NumberField::rationals()
}

fn w() -> NumberField {
    NumberField::cube_roots_of_unity('w')
}

fn xy(text: &str, field: &NumberField) -> MPoly {
    parse_polynomial(text, field, &XY).unwrap()
}

fn hom(name: &str, field: &NumberField) -> HomFoliation {
    catalog_by_name(name, field).unwrap().hom.unwrap()
}

fn lambda_poly(roots: &[AlgNum]) -> MPoly {
    let field = roots[0].field().clone();
    let l = MPoly::var_at(&field, &LAMBDA, 0);
    roots.iter().fold(MPoly::one(&field, &LAMBDA), |acc, r| {
        &acc * &(&l - &MPoly::constant(&field, &LAMBDA, r.clone()))
    })
}

#[test]
fn omega1_cone_and_discriminant() {
    let k = q();
    let inv = hom_invariants(&hom("omega1", &k)).unwrap();
    assert_eq!(inv.cone, xy("x*y^4 - x^4*y", &k));
    assert_eq!(inv.discriminant, xy("16*x^3*y^3", &k));
}

#[test]
fn example5_invariants_and_type() {
    let k = q();
    let h = hom("example5", &k);
    let inv = hom_invariants(&h).unwrap();
    assert_eq!(inv.cone, xy("x*y*(6*x^4 - 10*x^2*y^2 + y^4)", &k));
    // A_x B_y - A_y B_x with A = y^5 gives -5y^4 B_x.
    assert_eq!(inv.discriminant, xy("-150*x^2*y^4*(x - y)*(x + y)", &k));
    let printed = xy("150*x^2*y^4*(x - y)*(x + y)", &k);
    assert_eq!(inv.discriminant.normalize(), printed.normalize());
    let t = hom_type(&h).unwrap();
    assert_eq!(t, HomType::from_counts(5, &[(2, 1), (4, 1)], &[(1, 2)]));
    assert_eq!(t.to_string(), "1*R2 + 1*R4 + 2*T1");
    assert!(!is_convex_hom(&h).unwrap());
}

#[test]
fn omega2_cone_matches_expansion() {
    let k = q();
    let h = hom("omega2", &k);
    let cone = hom_invariants(&h).unwrap().cone;
    assert_eq!(cone, xy("x*y*(x - y)*(x^2 - x*y + y^2)", &k));
    for (px, py) in [(1, 2), (-3, 5), (7, 1), (2, -9), (4, 4)] {
        let pt = [k.int(px), k.int(py)];
        let direct = &(&k.int(px) * &h.a().evaluate(&pt).unwrap())
            + &(&k.int(py) * &h.b().evaluate(&pt).unwrap());
        assert_eq!(cone.evaluate(&pt).unwrap(), direct);
    }
}

#[test]
fn degree_four_types() {
    let (k, kw) = (q(), w());
    let r5 = NumberField::quadratic(5, 's').unwrap();
    let expected = [
        ("omega1", "2*R3", &k),
        ("omega2", "3*R2", &k),
        ("omega3", "1*R1 + 1*R2 + 1*R3", &k),
        ("omega4", "2*R1 + 2*R2", &r5),
        ("omega5", "3*R1 + 1*R3", &kw),
    ];
    for (name, ty, field) in expected {
        let h = hom(name, field);
        let t = hom_type(&h).unwrap();
        assert_eq!(t.to_string(), ty, "{name}");
        assert_eq!(t.weight(), 6);
        assert!(is_convex_hom(&h).unwrap());
    }
}

#[test]
fn type_needs_split_discriminant() {
    let k = q();
    // The discriminant has a quadratic factor without rational roots.
    let h = HomFoliation::new(xy("y^3", &k), xy("x^3 + y^3 + x*y^2", &k)).unwrap();
    let d = h.discriminant();
    match hom_type(&h) {
        Err(HomError::FactorOutsideField(_)) => {}
        other => panic!("{other:?} for discriminant {d}"),
    }
}

#[test]
fn construction_errors() {
    let k = q();
    assert_eq!(
        HomFoliation::new(xy("x*y", &k), xy("x^2", &k)).unwrap_err(),
        HomError::CommonFactor("x".into())
    );
    assert_eq!(
        HomFoliation::new(xy("y", &k), xy("-x", &k)).unwrap_err(),
        HomError::DegreeTooSmall(1)
    );
    assert_eq!(
        HomFoliation::new(xy("y^2 + x", &k), xy("x^2", &k)).unwrap_err(),
        HomError::NotHomogeneous
    );
    assert_eq!(
        HomFoliation::new(xy("y^2", &k), xy("x^3", &k)).unwrap_err(),
        HomError::NotHomogeneous
    );
}

#[test]
fn cs_polynomials_of_table() {
    let kw = w();
    let r13 = NumberField::quadratic(13, 's').unwrap();
    let r5 = NumberField::quadratic(5, 's').unwrap();
    let one = |k: &NumberField| k.one();
    let cases: Vec<(&str, NumberField, Vec<AlgNum>)> = vec![
        ("omega1", kw.clone(), vec![
            one(&kw), one(&kw), kw.rat(ratio(-1, 3)), kw.rat(ratio(-1, 3)), kw.rat(ratio(-1, 3)),
        ]),
        ("omega2", kw.clone(), vec![one(&kw), one(&kw), one(&kw), kw.int(-1), kw.int(-1)]),
        ("omega4", r5.clone(), vec![one(&r5), one(&r5), one(&r5), one(&r5), r5.int(-3)]),
        ("omega5", kw.clone(), vec![one(&kw), one(&kw), one(&kw), one(&kw), kw.int(-3)]),
    ];
    for (name, field, roots) in cases {
        let h = hom(name, &field);
        assert_eq!(cs_polynomial(&h).unwrap(), lambda_poly(&roots), "{name}");
    }
    let s = r13.generator();
    let third = |sign: i64| -&(&(&r13.int(13) + &(&r13.int(2 * sign) * &s)) / &r13.int(13));
    let h = hom("omega3", &r13);
    let cs = cs_polynomial(&h).unwrap();
    let roots = vec![one(&r13), one(&r13), one(&r13), third(1), third(-1)];
    assert_eq!(cs, lambda_poly(&roots));
    let rational = parse_polynomial("(l - 1)^3*(l^2 + 2*l + 9/13)", &r13, &['l'])
        .unwrap()
        .rename(&LAMBDA);
    assert_eq!(cs, rational);
}

#[test]
fn cs_polynomial_needs_points_in_field() {
    let h = hom("omega1", &q());
    assert!(matches!(cs_polynomial(&h), Err(HomError::RootOutsideField(_))));
}

#[test]
fn cs_agrees_with_residue_oracle() {
    // At [1:t:0] the index along infinity is B(1,t) / C'(t) with C(t) = A(1,t) + t B(1,t).
    let kw = w();
    for name in ["omega1", "omega2", "omega5", "h0(3)"] {
        let h = hom(name, &kw);
        let one = kw.one();
        let at1 = |p: &MPoly| UPoly::from_mpoly(&p.specialize(0, &one), 1).unwrap();
        let c = at1(&h.cone());
        let b = at1(h.b());
        let f = h.foliation();
        let inf = crate::foliation::Line::infinity(&kw);
        for p in points_at_infinity(&h).unwrap() {
            let SpherePoint::Finite(t) = &p else { continue };
            let expected = &b.eval(t) / &c.derivative().eval(t);
            let s = p.point_at_infinity(&kw);
            let got = local_invariants(&f, &s, std::slice::from_ref(&inf))
                .unwrap()
                .cs_along(&inf)
                .unwrap();
            assert_eq!(got, expected, "{name} at {s}");
        }
    }
}

#[test]
fn vanishing_orders() {
    let kw = w();
    for name in ["omega1", "omega2", "omega5", "h0(3)", "h1(3)"] {
        let h = hom(name, &kw);
        let f = h.foliation();
        let origin = crate::foliation::ProjPoint::origin(&kw);
        assert_eq!(local_invariants(&f, &origin, &[]).unwrap().nu, h.degree());
        for p in points_at_infinity(&h).unwrap() {
            let s = p.point_at_infinity(&kw);
            assert_eq!(local_invariants(&f, &s, &[]).unwrap().nu, 1, "{name} at {s}");
        }
    }
}

#[test]
fn self_map_of_omega1() {
    let kw = w();
    let g = gmap(&hom("omega1", &kw)).unwrap();
    assert_eq!(g.to_string(), "z^4");
    let an = gmap_analysis(&g).unwrap();
    let wv = kw.generator();
    let mut fixed = vec![
        SpherePoint::Finite(kw.zero()),
        SpherePoint::Finite(kw.one()),
        SpherePoint::Finite(wv.clone()),
        SpherePoint::Finite(&(-&wv) - &kw.one()),
        SpherePoint::Infinity,
    ];
    fixed.sort();
    assert_eq!(an.fixed, fixed.into_iter().map(|p| (p, 1)).collect::<Vec<_>>());
    assert_eq!(
        an.critical,
        vec![(SpherePoint::Finite(kw.zero()), 3), (SpherePoint::Infinity, 3)]
    );
    assert!(an.non_fixed_critical().is_empty());
}

#[test]
fn self_map_of_omega2() {
    let k = q();
    let g = gmap(&hom("omega2", &k)).unwrap();
    let z = |s: &str| UPoly::from_mpoly(&parse_polynomial(s, &k, &['z']).unwrap(), 0).unwrap();
    let (n, d) = (z("-z^3*(2 - z)"), z("1 - 2*z"));
    assert_eq!(g.numerator().mul(&d), g.denominator().mul(&n));
    assert!(g.denominator().leading().is_one());
    let an = gmap_analysis(&g).unwrap();
    assert_eq!(
        an.fixed_critical(),
        vec![
            (SpherePoint::Finite(k.zero()), 2),
            (SpherePoint::Finite(k.one()), 2),
            (SpherePoint::Infinity, 2)
        ]
    );
    assert!(an.non_fixed_critical().is_empty());
    assert!(!an.is_complete());
}

#[test]
fn degree_one_map_is_rejected() {
    let k = q();
    let z = UPoly::new(&k, vec![k.zero(), k.one()]);
    assert_eq!(
        RationalSelfMap::new(z, UPoly::constant(k.one())).unwrap_err(),
        HomError::DegreeTooSmall(1)
    );
}

#[test]
fn self_map_matches_geometry() {
    let kw = w();
    let r5 = NumberField::quadratic(5, 's').unwrap();
    let r13 = NumberField::quadratic(13, 's').unwrap();
    let cases = [
        ("omega1", &kw),
        ("omega2", &kw),
        ("omega3", &r13),
        ("omega4", &r5),
        ("omega5", &kw),
        ("example5", &kw),
        ("h1(3)", &kw),
        ("h0(3)", &kw),
    ];
    for (name, field) in cases {
        let c = gmap_coherence(&hom(name, field)).unwrap();
        assert!(c.holds(), "{name}: {c:?}");
    }
}

#[test]
fn discriminant_is_degree_times_critical_polynomial() {
    let k = q();
    for name in ["omega1", "omega3", "example5", "omega3(5,2)"] {
        let h = hom(name, &k);
        let one = k.one();
        let at1 = |p: &MPoly| UPoly::from_mpoly(&p.specialize(0, &one), 1).unwrap();
        let (n, den) = (at1(&-h.a()), at1(h.b()));
        let w0 = n.derivative().mul(&den).sub(&n.mul(&den.derivative()));
        assert_eq!(at1(&h.discriminant()), w0.scale(&k.int(h.degree() as i64)), "{name}");
        assert_eq!(gmap(&h).unwrap().critical_polynomial().monic(), w0.monic());
    }
}

#[test]
fn tangency_divisor_identity() {
    let k = q();
    for name in [
        "omega1", "omega2", "omega3", "omega4", "omega5", "example5", "omega3(4,1)",
        "omega3(5,1)", "omega3(5,2)",
    ] {
        let c = tangency_divisor_check(&hom(name, &k)).unwrap();
        assert!(c.holds, "{name}");
        assert!(c.local_agreement, "{name}");
    }
}

#[test]
fn omega1_tangency_groups() {
    let k = q();
    let groups = infinity_tangency(&hom("omega1", &k)).unwrap();
    let by_tau = |t: u32| -> Vec<MPoly> {
        groups.iter().filter(|g| g.tau == t).map(|g| g.lines.clone()).collect()
    };
    assert_eq!(by_tau(4), vec![xy("y", &k), xy("x", &k)]);
    assert_eq!(by_tau(1), vec![xy("x^3 - y^3", &k).normalize()]);
}

#[test]
fn family_of_prop_two_one() {
    let k = q();
    let h = hom("omega3(5,2)", &k);
    assert!(is_convex_hom(&h).unwrap());
    assert_eq!(hom_type(&h).unwrap().to_string(), "2*R2 + 1*R4");
    assert_eq!(hom("omega3(4,1)", &k), hom("omega3", &k));
}

#[test]
fn catalog_entries() {
    let k = q();
    let e = catalog_by_name("omega4", &k).unwrap();
    assert_eq!(e.a, xy("y^3*(4*x + y)", &k));
    assert_eq!(e.b, xy("x^3*(x + 4*y)", &k));
    let f = catalog_by_name("fermat(2)", &k).unwrap();
    assert_eq!(f.a, xy("-(y^2 - y)", &k));
    assert_eq!(f.b, xy("x^2 - x", &k));
    assert!(f.hom.is_none());
    assert_eq!(f.foliation.degree(), 2);
    assert_eq!(catalog_by_name("hesse", &k).unwrap().foliation.degree(), 4);
    for d in 2..=4 {
        for name in ["f1", "f2", "h0", "h1", "fermat"] {
            let e = catalog_by_name(&format!("{name}({d})"), &k).unwrap();
            assert_eq!(e.foliation.degree(), d, "{name}({d})");
        }
    }
    assert_eq!(
        catalog_by_name("sphere", &k).unwrap_err(),
        HomError::UnknownName("sphere".into())
    );
    assert!(matches!(catalog_by_name("omega3(5,4)", &k), Err(HomError::BadParams(_))));
    assert!(matches!(catalog_by_name("fermat(1)", &k), Err(HomError::BadParams(_))));
    assert!(matches!(catalog_by_name("hesse(3)", &k), Err(HomError::BadParams(_))));
    assert!(matches!(catalog_by_name("omega7", &k), Err(HomError::UnknownName(_))));
    for name in ["fermat(3)", "hesse", "omega2", "omega3(5,2)", "example5", "h0(2)"] {
        assert_eq!(name.parse::<CatalogName>().unwrap().to_string(), name);
    }
}

#[test]
fn homogenized_convexity_agrees() {
    let kw = w();
    for name in ["omega1", "omega2", "omega4", "example5", "h1(3)", "h0(4)"] {
        let h = hom(name, &kw);
        assert_eq!(
            is_convex_hom(&h).unwrap(),
            is_convex(&h.foliation()).unwrap(),
            "{name}"
        );
    }
}

fn small_form(degree: u32) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, (degree + 1) as usize)
}

fn form_of(coeffs: &[i64], k: &NumberField) -> MPoly {
    let d = coeffs.len() as u32 - 1;
    let terms: Vec<(i64, Vec<u32>)> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, vec![d - i as u32, i as u32]))
        .collect();
    let t: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, &e[..])).collect();
    MPoly::from_int_terms(k, &XY, &t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tangency_identity_on_random_forms(
        (a, b) in (2u32..=3).prop_flat_map(|d| (small_form(d), small_form(d)))
    ) {
        let k = q();
        let h = match HomFoliation::new(form_of(&a, &k), form_of(&b, &k)) {
            Ok(h) => h,
            Err(_) => return Ok(()),
        };
        prop_assume!(!h.discriminant().is_zero());
        let c = tangency_divisor_check(&h).unwrap();
        prop_assert!(c.holds);
        prop_assert!(c.local_agreement);
        prop_assert_eq!(is_convex_hom(&h).unwrap(), is_convex(&h.foliation()).unwrap());
        if let Ok(t) = hom_type(&h) {
            prop_assert_eq!(t.weight(), 2 * h.degree() - 2);
            prop_assert_eq!(t.is_convex(), is_convex_hom(&h).unwrap());
        }
    }
}
