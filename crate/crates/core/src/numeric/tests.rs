use proptest::prelude::*;

use super::*;

fn q5() -> NumberField {
    NumberField::quadratic(5, 's').unwrap()
}

fn elem(f: &NumberField, c: &[(i64, i64)]) -> AlgNum {
    AlgNum::from_power_basis(f, c.iter().map(|&(n, d)| ratio(n, d)).collect())
}

#[test]
fn degree_one_field_is_the_rationals() {
    let f = NumberField::new(vec![rat(0), rat(1)], 't').unwrap();
    assert!(f.is_rational());
    assert_eq!(f.label(), "Q");
    let a = f.rat(ratio(1, 2)) + f.rat(ratio(1, 3));
    assert_eq!(a.as_rational(), Some(&ratio(5, 6)));
}

#[test]
fn construction_rejects_bad_minimal_polynomials() {
    assert_eq!(
        NumberField::new(vec![rat(-1), rat(0), rat(1)], 't').unwrap_err(),
        NumericError::ReducibleAtSmallDegree("-1".into())
    );
    assert_eq!(
        NumberField::new(vec![rat(1), rat(0), rat(2)], 't').unwrap_err(),
        NumericError::NonMonic
    );
    assert!(NumberField::new(vec![rat(-1), rat(-1), rat(1)], 't').is_ok());
    // x^3 - 2 has no rational root; x^3 - 8 does.
    assert!(NumberField::new(vec![rat(-2), rat(0), rat(0), rat(1)], 't').is_ok());
    assert!(NumberField::new(vec![rat(-8), rat(0), rat(0), rat(1)], 't').is_err());
    let quartic = NumberField::new(vec![rat(1), rat(0), rat(0), rat(0), rat(1)], 't').unwrap();
    assert_eq!(quartic.irreducibility(), Irreducibility::Asserted);
}

#[test]
fn generator_relations() {
    let f = q5();
    let s = f.generator();
    assert_eq!(&s * &s, f.int(5));
    let alpha = NumberField::new(vec![rat(1), rat(-1), rat(1)], 'a').unwrap();
    let a = alpha.generator();
    assert_eq!(&a * &a, &a - &alpha.one());
}

#[test]
fn inverse_in_cyclotomic_field() {
    let f = NumberField::cube_roots_of_unity('r');
    let r = f.generator();
    let inv = (&f.one() + &r).inverse().unwrap();
    assert_eq!(inv, -&r);
    assert_eq!(f.zero().inverse().unwrap_err(), NumericError::DivisionByZero);
}

#[test]
fn embedding_between_presentations() {
    let rho_field = NumberField::cube_roots_of_unity('r');
    let alpha_field = NumberField::new(vec![rat(1), rat(-1), rat(1)], 'a').unwrap();
    let image = &alpha_field.generator() - &alpha_field.one();
    let rho = rho_field.generator();
    let e = rho.embed(&alpha_field, &image).unwrap();
    assert_eq!(e, image);
    // The image satisfies the source relation.
    assert!((&(&e * &e) + &e + alpha_field.one()).is_zero());
    assert_eq!(
        rho.embed(&alpha_field, &alpha_field.generator()).unwrap_err(),
        NumericError::NotARoot
    );
    let f = q5();
    let conj = f.generator().embed(&f, &-f.generator()).unwrap();
    assert_eq!(conj, -f.generator());
    let seven_thirds = NumberField::rationals().rat(ratio(7, 3));
    assert_eq!(seven_thirds.embed(&f, &f.int(0)).unwrap(), f.rat(ratio(7, 3)));
}

#[test]
fn mismatched_fields_are_reported() {
    let a = q5().generator();
    let b = NumberField::cube_roots_of_unity('r').generator();
    assert!(matches!(a.checked_add(&b), Err(NumericError::FieldMismatch(..))));
    // Rationals promote.
    let half = NumberField::rationals().rat(ratio(1, 2));
    assert_eq!(a.checked_mul(&half).unwrap(), elem(&q5(), &[(0, 1), (1, 2)]));
}

#[test]
fn display_is_a_polynomial_in_the_generator() {
    let f = q5();
    assert_eq!(elem(&f, &[(-1, 3), (2, 1)]).to_string(), "2*s - 1/3");
    assert_eq!(elem(&f, &[(0, 1), (-1, 1)]).to_string(), "-s");
    assert_eq!(f.zero().to_string(), "0");
    assert_eq!(f.declaration(), "field Q(s): s^2 - 5 = 0");
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| ratio(n, d))
}

fn cubic_field() -> NumberField {
    // t^3 - t - 1 has no rational root.
    NumberField::new(vec![rat(-1), rat(-1), rat(0), rat(1)], 'c').unwrap()
}

proptest! {
    #[test]
    fn field_axioms_hold_exactly(
        a in proptest::collection::vec(small_rational(), 3),
        b in proptest::collection::vec(small_rational(), 3),
    ) {
        let f = cubic_field();
        let x = AlgNum::from_power_basis(&f, a);
        let y = AlgNum::from_power_basis(&f, b);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        // Reducing a reduced element changes nothing.
        let again = AlgNum::from_power_basis(&f, x.coeffs().to_vec());
        prop_assert_eq!(again.coeffs(), x.coeffs());
    }

    #[test]
    fn embedding_is_multiplicative(
        a in proptest::collection::vec(small_rational(), 2),
        b in proptest::collection::vec(small_rational(), 2),
    ) {
        let rho_field = NumberField::cube_roots_of_unity('r');
        let alpha_field = NumberField::new(vec![rat(1), rat(-1), rat(1)], 'a').unwrap();
        let image = &alpha_field.generator() - &alpha_field.one();
        let x = AlgNum::from_power_basis(&rho_field, a);
        let y = AlgNum::from_power_basis(&rho_field, b);
        let lhs = (&x * &y).embed(&alpha_field, &image).unwrap();
        let rhs = &x.embed(&alpha_field, &image).unwrap() * &y.embed(&alpha_field, &image).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
