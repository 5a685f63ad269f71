//! Types and Camacho–Sad polynomials of the five convex homogeneous foliations of degree four.

use foliations::classification::{table1, table_fields, verify_theorem_a};
use foliations::homogeneous::{catalog, cs_polynomial, hom_type};

fn main() {
    for row in table1() {
        let k = table_fields(row.index);
        let h = catalog(row.representative, &k).unwrap().hom.unwrap();
        println!("{}: {}", row.representative, hom_type(&h).unwrap());
        println!("    {}", cs_polynomial(&h).unwrap());
    }
    println!();
    println!("{}", verify_theorem_a());
}
