//! Sparse polynomials: gcd, resultant, factoring binary forms into lines, affine pullback.

use foliations::numeric::NumberField;
use foliations::polynomial::{gcd, linear_factors, resultant, AffineMap};
use foliations::text::parse_polynomial;

fn main() {
    let q = NumberField::rationals();
    let xy = ['x', 'y'];
    let p = parse_polynomial("(x - y)^2 (x + 2y)", &q, &xy).unwrap();
    let r = parse_polynomial("(x - y) (x^2 + y^2)", &q, &xy).unwrap();
    println!("gcd = {}", gcd(&p, &r));
    println!("res_y(x^2 + y^2 - 1, x - y) = {}", {
        let a = parse_polynomial("x^2 + y^2 - 1", &q, &xy).unwrap();
        let b = parse_polynomial("x - y", &q, &xy).unwrap();
        resultant(&a, &b, 'y').unwrap()
    });

    let w = NumberField::cube_roots_of_unity('w');
    let form = parse_polynomial("x y (x^3 - y^3)", &w, &['x', 'y', 'z']).unwrap();
    let lf = linear_factors(&form).unwrap();
    println!("x y (x^3 - y^3) over Q(w): {}", lf.lines);

    let phi = AffineMap::new(
        vec![vec![q.int(1), q.int(1)], vec![q.zero(), q.int(2)]],
        vec![q.int(3), q.zero()],
    )
    .unwrap();
    let f = parse_polynomial("x^2 - y", &q, &xy).unwrap();
    println!("(x^2 - y)(x + y + 3, 2y) = {}", phi.pullback_poly(&f).unwrap());
}
