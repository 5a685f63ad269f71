use proptest::prelude::*;

use super::*;
use crate::numeric::{ratio, AlgNum, NumberField};
use crate::polynomial::MPoly;
use crate::text::parse_form;

fn form(text: &str) -> ProjFoliation {
    parse_form(text).unwrap().foliation().unwrap()
}

fn omega1() -> ProjFoliation {
    form("omega = y^4 dx - x^4 dy")
}

fn fermat4() -> ProjFoliation {
    form("omega = -(y^4 - y) dx + (x^4 - x) dy")
}

fn example5() -> ProjFoliation {
    form("omega = y^5 dx + 2x^3(3x^2 - 5y^2) dy")
}

fn f2_4() -> ProjFoliation {
    form("omega = x^4 dx + y^4(x dy - y dx)")
}

fn xyz(terms: &[(i64, &[u32])]) -> MPoly {
    MPoly::from_int_terms(&NumberField::rationals(), &XYZ, terms)
}

fn line(k: &NumberField, a: AlgNum, b: AlgNum, c: AlgNum) -> Line {
    let _ = k;
    Line::new(a, b, c).unwrap()
}

#[test]
fn homogenizing_the_first_convex_form() {
    let (f, case) = make_foliation_with_case(
        &MPoly::from_int_terms(&NumberField::rationals(), &XY, &[(1, &[0, 4])]),
        &MPoly::from_int_terms(&NumberField::rationals(), &XY, &[(-1, &[4, 0])]),
    )
    .unwrap();
    assert_eq!(case, InfinityCase::Invariant);
    assert_eq!(f.degree(), 4);
    assert_eq!(f.a(), &xyz(&[(1, &[0, 4, 1])]));
    assert_eq!(f.b(), &xyz(&[(-1, &[4, 0, 1])]));
    assert_eq!(f.c(), &xyz(&[(1, &[4, 1, 0]), (-1, &[1, 4, 0])]));
    assert!(f.euler_residual().is_zero());
}

#[test]
fn degree_conventions() {
    let q = NumberField::rationals();
    assert_eq!(fermat4().degree(), 4);
    assert!(is_invariant_line(&fermat4(), &Line::infinity(&q)));
    let (f2, case) = make_foliation_with_case(
        &MPoly::from_int_terms(&q, &XY, &[(1, &[4, 0]), (-1, &[0, 5])]),
        &MPoly::from_int_terms(&q, &XY, &[(1, &[1, 4])]),
    )
    .unwrap();
    assert_eq!(case, InfinityCase::NotInvariant);
    assert_eq!(f2.degree(), 4);
    assert!(!is_invariant_line(&f2, &Line::infinity(&q)));
    let pencil = make_foliation(&MPoly::one(&q, &XY), &MPoly::zero(&q, &XY)).unwrap();
    assert_eq!(pencil.degree(), 0);
}

#[test]
fn construction_errors() {
    let q = NumberField::rationals();
    let x = MPoly::var_at(&q, &XY, 0);
    let y = MPoly::var_at(&q, &XY, 1);
    assert_eq!(
        make_foliation(&MPoly::zero(&q, &XY), &MPoly::zero(&q, &XY)).unwrap_err(),
        FoliationError::ZeroForm
    );
    assert!(matches!(
        make_foliation(&(&x * &y), &(&x * &x)).unwrap_err(),
        FoliationError::CommonFactor(_)
    ));
    assert_eq!(
        ProjFoliation::new(xyz(&[(1, &[0, 1, 0])]), xyz(&[(1, &[1, 0, 0])]), xyz(&[])).unwrap_err(),
        FoliationError::EulerViolated
    );
}

#[test]
fn singular_points_of_the_first_convex_form() {
    let k = NumberField::cube_roots_of_unity('w');
    let sing = singular_points(&omega1(), &k).unwrap();
    let w = k.generator();
    let expected = vec![
        ProjPoint::new(k.zero(), k.zero(), k.one()).unwrap(),
        ProjPoint::new(k.one(), &k.int(-1) - &w, k.zero()).unwrap(),
        ProjPoint::new(k.one(), k.zero(), k.zero()).unwrap(),
        ProjPoint::new(k.one(), w.clone(), k.zero()).unwrap(),
        ProjPoint::new(k.one(), k.one(), k.zero()).unwrap(),
        ProjPoint::new(k.zero(), k.one(), k.zero()).unwrap(),
    ];
    assert_eq!(sing.points, expected);
    assert_eq!(sing.milnor, vec![16, 1, 1, 1, 1, 1]);
    assert!(sing.is_complete());
    // Over the rationals two points are missing.
    let partial = singular_points(&omega1(), &NumberField::rationals()).unwrap();
    assert_eq!(partial.points.len(), 4);
    assert!(!partial.is_complete());
}

#[test]
fn fermat_singularities_are_nondegenerate() {
    let k = NumberField::cube_roots_of_unity('w');
    let sing = singular_points(&fermat4(), &k).unwrap();
    assert_eq!(sing.points.len(), 21);
    assert!(sing.milnor.iter().all(|&m| m == 1));
    assert!(sing.is_complete());
}

#[test]
fn radial_pencil_has_one_singular_point() {
    let f = form("omega = x dy - y dx");
    let sing = singular_points(&f, &NumberField::rationals()).unwrap();
    assert_eq!(sing.points, vec![ProjPoint::origin(&NumberField::rationals())]);
    assert!(sing.is_complete());
}

#[test]
fn local_field_of_fermat_at_the_origin() {
    let q = NumberField::rationals();
    let x = local_vector_field(&fermat4(), &ProjPoint::origin(&q)).unwrap();
    assert_eq!(x.chart, Chart::Z);
    assert_eq!(x.p, MPoly::from_int_terms(&q, &UV, &[(1, &[4, 0]), (-1, &[1, 0])]));
    assert_eq!(x.q, MPoly::from_int_terms(&q, &UV, &[(1, &[0, 4]), (-1, &[0, 1])]));
    let regular = local_vector_field(&fermat4(), &ProjPoint::affine(q.int(2), q.int(0))).unwrap();
    assert!(!regular.is_singular());
}

#[test]
fn radial_point_at_infinity() {
    let q = NumberField::rationals();
    let f = omega1();
    let p = ProjPoint::new(q.zero(), q.one(), q.zero()).unwrap();
    let data = local_invariants(&f, &p, &[Line::infinity(&q)]).unwrap();
    assert_eq!(data.chart, Chart::Y);
    assert_eq!((data.nu, data.tau, data.mu), (1, 4, 1));
    assert_eq!(data.radial_order(), Some(3));
    assert_eq!(data.cs_along(&Line::infinity(&q)).unwrap(), q.one());
    assert_eq!(data.bb, Some(q.int(4)));
}

#[test]
fn camacho_sad_at_a_saddle_at_infinity() {
    let q = NumberField::rationals();
    let p = ProjPoint::new(q.one(), q.one(), q.zero()).unwrap();
    let data = local_invariants(&omega1(), &p, &[Line::infinity(&q)]).unwrap();
    assert_eq!(data.cs_along(&Line::infinity(&q)).unwrap(), q.rat(ratio(-1, 3)));
    assert_eq!(data.tau, 1);
}

#[test]
fn fermat_origin_is_radial_with_five_lines() {
    let k = NumberField::cube_roots_of_unity('w');
    let w = k.generator();
    let mut lines = vec![
        line(&k, k.one(), k.zero(), k.zero()),
        line(&k, k.zero(), k.one(), k.zero()),
    ];
    for c in [k.one(), w.clone(), &w * &w] {
        lines.push(line(&k, -&c, k.one(), k.zero()));
    }
    let o = ProjPoint::origin(&k);
    let data = local_invariants(&fermat4(), &o, &lines).unwrap();
    // The linear part is minus the identity; the first non-radial jet has degree 4.
    assert_eq!((data.nu, data.tau, data.mu, data.sigma), (1, 4, 1, 5));
    assert_eq!(data.sigma, data.tau + 1);
    for l in &lines {
        assert_eq!(data.cs_along(l).unwrap(), k.one());
    }
    let bad = line(&k, k.one(), k.one(), k.one());
    assert!(matches!(
        local_invariants(&fermat4(), &o, &[bad]).unwrap_err(),
        FoliationError::LineMissesPoint(_, _)
    ));
}

#[test]
fn fermat_saddle_on_two_lines() {
    // (1, 0) lies on x = 1 and y = 0 only; the eigenvalues there are 3 and -1.
    let q = NumberField::rationals();
    let p = ProjPoint::affine(q.one(), q.zero());
    let x1 = line(&q, q.one(), q.zero(), q.int(-1));
    let y0 = line(&q, q.zero(), q.one(), q.zero());
    let data = local_invariants(&fermat4(), &p, &[x1.clone(), y0.clone()]).unwrap();
    assert_eq!((data.nu, data.tau, data.mu, data.sigma), (1, 1, 1, 2));
    let product = &data.cs_along(&x1).unwrap() * &data.cs_along(&y0).unwrap();
    assert!(product.is_one());
}

#[test]
fn tau_beyond_the_degree_is_reported() {
    let f = form("omega = x dy - y dx");
    let err = local_invariants(&f, &ProjPoint::origin(&NumberField::rationals()), &[]).unwrap_err();
    assert_eq!(err, FoliationError::TauExceedsDegree(0));
}

#[test]
fn inflection_of_the_first_convex_form() {
    let k = NumberField::cube_roots_of_unity('w');
    let f = omega1().promote(&k).unwrap();
    let dec = inflection_divisor(&f).unwrap();
    assert_eq!(dec.full.degree(), 12);
    assert!(dec.transverse_part.is_empty());
    let v = |i| MPoly::var_at(&k, &XYZ, i);
    let w = k.generator();
    assert_eq!(dec.full.multiplicity(&v(2)), 1);
    assert_eq!(dec.full.multiplicity(&v(0)), 4);
    assert_eq!(dec.full.multiplicity(&v(1)), 4);
    for r in [k.one(), w.clone(), &w * &w] {
        assert_eq!(dec.full.multiplicity(&(&v(1) - &v(0).scale(&r))), 1);
    }
    assert!(is_convex(&omega1()).unwrap());
}

#[test]
fn inflection_of_the_degree_five_example() {
    let dec = inflection_divisor(&example5()).unwrap();
    let q = NumberField::rationals();
    let v = |i| MPoly::var_at(&q, &XYZ, i);
    let expected = crate::polynomial::Divisor::from_factors([(&v(0) - &v(1), 1), (&v(0) + &v(1), 1)]);
    assert_eq!(dec.transverse_part, expected);
    assert_eq!(dec.full.degree(), 15);
    assert!(!is_convex(&example5()).unwrap());
}

#[test]
fn degree_one_foliations_are_convex() {
    let f = form("omega = (y - 1) dx + (2x + y) dy");
    assert_eq!(f.degree(), 1);
    let dec = inflection_divisor(&f).unwrap();
    assert_eq!(dec.full.degree(), 3);
    assert!(dec.transverse_part.is_empty());
}

#[test]
fn invariant_line_tests() {
    let q = NumberField::rationals();
    let f = omega1();
    assert!(is_invariant_line(&f, &line(&q, q.one(), q.zero(), q.zero())));
    assert!(!is_invariant_line(&f, &line(&q, q.one(), q.one(), q.one())));
    assert!(is_invariant_line(&f, &Line::infinity(&q)));
    assert!(!is_convex(&f2_4()).unwrap());
}

#[test]
fn linear_factors_of_the_inflection_curve_split_by_invariance() {
    let k = NumberField::cube_roots_of_unity('w');
    for f in [omega1(), fermat4(), example5(), f2_4()] {
        let f = f.promote(&k).unwrap();
        let dec = inflection_divisor(&f).unwrap();
        for (l, _) in dec.invariant_lines() {
            assert!(is_invariant_line(&f, &l));
        }
        for (l, _) in dec.transverse_lines() {
            assert!(!is_invariant_line(&f, &l));
        }
    }
}

// Solves `Z x R = (a, b, c)` for a homogeneous field `Z` of degree d, then evaluates
// det(R, Z, Z(Z)) as an independent route to the inflection curve.
fn determinant_inflection(f: &ProjFoliation) -> MPoly {
    let field = f.field().clone();
    let d = f.degree();
    let monos: Vec<Vec<u32>> = (0..=d)
        .flat_map(|i| (0..=d - i).map(move |j| vec![i, j, d - i - j]))
        .collect();
    let n = monos.len();
    let v = |i| MPoly::var_at(&field, &XYZ, i);
    // Column k*n + m is the coefficient of monos[m] in Z_k.
    let basis = |k: usize, m: usize| {
        let mut z = vec![MPoly::zero(&field, &XYZ); 3];
        z[k] = MPoly::monomial(&field, &XYZ, field.one(), monos[m].clone());
        [
            &(&z[1] * &v(2)) - &(&z[2] * &v(1)),
            &(&z[2] * &v(0)) - &(&z[0] * &v(2)),
            &(&z[0] * &v(1)) - &(&z[1] * &v(0)),
        ]
    };
    let targets: Vec<Vec<u32>> = (0..=d + 1)
        .flat_map(|i| (0..=d + 1 - i).map(move |j| vec![i, j, d + 1 - i - j]))
        .collect();
    let mut rows: Vec<Vec<AlgNum>> = Vec::new();
    let cols: Vec<[MPoly; 3]> = (0..3 * n).map(|c| basis(c / n, c % n)).collect();
    let [a, b, c] = f.coefficients();
    let rhs = [a, b, c];
    for comp in 0..3 {
        for t in &targets {
            let mut row: Vec<AlgNum> = cols.iter().map(|col| col[comp].coefficient(t)).collect();
            row.push(rhs[comp].coefficient(t));
            rows.push(row);
        }
    }
    // Gaussian elimination; free unknowns are set to zero.
    let ncols = 3 * n;
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().unwrap();
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                let sub: Vec<AlgNum> = rows[r].iter().map(|x| x * &factor).collect();
                rows[i] = rows[i].iter().zip(&sub).map(|(x, y)| x - y).collect();
            }
        }
        pivots.push(col);
        r += 1;
    }
    for row in &rows[r..] {
        assert!(row[ncols].is_zero(), "inconsistent system");
    }
    let mut z = vec![MPoly::zero(&field, &XYZ); 3];
    for (i, &col) in pivots.iter().enumerate() {
        let (k, m) = (col / n, col % n);
        z[k] = &z[k] + &MPoly::monomial(&field, &XYZ, rows[i][ncols].clone(), monos[m].clone());
    }
    let apply = |g: &MPoly| (0..3).fold(MPoly::zero(&field, &XYZ), |acc, i| &acc + &(&z[i] * &g.derivative(i)));
    let zz: Vec<MPoly> = z.iter().map(apply).collect();
    let m = vec![vec![v(0), v(1), v(2)], z.clone(), zz];
    crate::polynomial::determinant(m).unwrap()
}

#[test]
fn affine_and_homogeneous_inflection_routes_agree() {
    let hesse = form("omega = (2x^3 - y^3 - 1)y dx + (2y^3 - x^3 - 1)x dy");
    let random = form("omega = (x^2 - 3y + 1) dx + (x y + 2) dy");
    for f in [omega1(), fermat4(), example5(), f2_4(), hesse, random] {
        let oracle = determinant_inflection(&f);
        assert_eq!(oracle.normalize(), inflection_polynomial(&f).unwrap().normalize());
    }
}

fn small_affine_form() -> impl Strategy<Value = (MPoly, MPoly)> {
    let terms = || proptest::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 1..5);
    (terms(), terms()).prop_map(|(ta, tb)| {
        let q = NumberField::rationals();
        let build = |ts: Vec<(i64, u32, u32)>| {
            MPoly::from_terms(&q, &XY, ts.into_iter().map(|(c, i, j)| (vec![i, j], q.int(c))))
        };
        (build(ta), build(tb))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructed_foliations_satisfy_euler_and_inflection_degree((a, b) in small_affine_form()) {
        let Ok(f) = make_foliation(&a, &b) else { return Ok(()); };
        prop_assert!(f.euler_residual().is_zero());
        prop_assume!(f.degree() >= 1);
        let dec = inflection_divisor(&f).unwrap();
        prop_assert_eq!(dec.full.degree(), 3 * f.degree());
        prop_assert_eq!(dec.polynomial.total_degree(), Some(3 * f.degree()));
    }

    #[test]
    fn milnor_one_iff_jacobian_nonzero((a, b) in small_affine_form()) {
        let Ok(f) = make_foliation(&a, &b) else { return Ok(()); };
        let q = NumberField::rationals();
        let Ok(sing) = singular_points(&f, &q) else { return Ok(()); };
        for (p, mu) in sing.iter() {
            let x = local_vector_field(&f, p).unwrap();
            prop_assert_eq!(mu == 1, jacobian_nonzero(&x.p, &x.q));
        }
    }
}
