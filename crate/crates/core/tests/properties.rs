use proptest::prelude::*;

use foliations::classification::{degenerate_along_line, ClassError};
use foliations::foliation::{is_invariant_line, make_foliation, Line, ProjPoint, XY};
use foliations::homogeneous::{hom_type, HomError, HomFoliation};
use foliations::numeric::{AlgNum, NumberField};
use foliations::polynomial::MPoly;
use foliations::text::{format_form, parse_form};

fn q() -> NumberField {
    NumberField::rationals()
}

fn poly(max_degree: u32) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((-4i64..=4, 0..=max_degree, 0..=max_degree), 1..5).prop_map(|ts| {
        let f = q();
        MPoly::from_terms(&f, &XY, ts.into_iter().map(|(c, i, j)| (vec![i, j], f.int(c))))
    })
}

fn form(degree: u32) -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(-3i64..=3, degree as usize + 1).prop_map(move |cs| {
        let f = q();
        MPoly::from_terms(
            &f,
            &XY,
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| (vec![degree - i as u32, i as u32], f.int(c))),
        )
    })
}

fn point() -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-4i64..=4).prop_filter("nonzero", |c| c.iter().any(|x| *x != 0))
}

fn nums(c: [i64; 3]) -> [AlgNum; 3] {
    let f = q();
    [f.int(c[0]), f.int(c[1]), f.int(c[2])]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn printed_forms_parse_back(a in poly(3), b in poly(3)) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let text = format_form(&q(), &[a.clone(), b.clone()]);
        let parsed = parse_form(&text).unwrap();
        prop_assert_eq!(parsed.coefficients, vec![a, b]);
    }

    #[test]
    fn joining_line_contains_both_points(p in point(), r in point()) {
        let [a, b, c] = nums(p);
        let [d, e, g] = nums(r);
        let p = ProjPoint::new(a, b, c).unwrap();
        let r = ProjPoint::new(d, e, g).unwrap();
        match Line::through(&p, &r) {
            Ok(l) => prop_assert!(l.contains(&p) && l.contains(&r)),
            Err(_) => prop_assert_eq!(p, r),
        }
    }

    #[test]
    fn invariant_lines_survive_a_change_of_coordinates(a in poly(2), b in poly(2), m in prop::array::uniform9(-2i64..=2)) {
        let Ok(f) = make_foliation(&a, &b) else { return Ok(()) };
        let k = q();
        let matrix: Vec<Vec<AlgNum>> = (0..3).map(|i| (0..3).map(|j| k.int(m[3 * i + j])).collect()).collect();
        let Ok(g) = f.linear_pullback(&matrix) else { return Ok(()) };
        prop_assert!(g.euler_residual().is_zero());
        prop_assert_eq!(g.degree(), f.degree());
        // l(x) = 0 pulls back to l(M x') = 0
        for l in [Line::infinity(&k), Line::new(k.one(), k.zero(), k.zero()).unwrap()] {
            let c = l.coeffs();
            let pulled: Vec<AlgNum> = (0..3)
                .map(|j| (0..3).fold(k.zero(), |acc, i| &acc + &(&c[i] * &matrix[i][j])))
                .collect();
            let pulled = Line::new(pulled[0].clone(), pulled[1].clone(), pulled[2].clone()).unwrap();
            prop_assert_eq!(is_invariant_line(&f, &l), is_invariant_line(&g, &pulled));
        }
    }

    #[test]
    fn homogeneous_foliations_degenerate_to_themselves(a in form(3), b in form(3)) {
        let Ok(h) = HomFoliation::new(a, b) else { return Ok(()) };
        let f = h.foliation();
        match degenerate_along_line(&f, &Line::infinity(&q())) {
            Ok(d) => {
                // Simple points and the full tangency count need convexity; the rest is general.
                prop_assert_eq!(&d.hom, &h);
                let c = d.checks;
                prop_assert!(c.line_invariant && c.same_points && c.same_tau && c.tau_bounded);
                prop_assert!(d.points.iter().all(|p| p.cs == p.hom_cs));
            }
            Err(ClassError::Hom(HomError::RootOutsideField(_))) => {}
            Err(ClassError::NotInvariant(_)) => prop_assert!(h.cone().is_zero()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn type_weight_is_twice_degree_minus_two(a in form(3), b in form(3)) {
        let Ok(h) = HomFoliation::new(a, b) else { return Ok(()) };
        if let Ok(t) = hom_type(&h) {
            prop_assert_eq!(t.weight(), 2 * h.degree() - 2);
        }
    }
}
