//! The inflection curve and its split into invariant lines and transverse components.

use foliations::foliation::inflection_divisor;
use foliations::homogeneous::{catalog, CatalogName};
use foliations::numeric::NumberField;

fn main() {
    let q = NumberField::rationals();
    for name in [CatalogName::Omega(2), CatalogName::Example5, CatalogName::F2(4), CatalogName::F1(4)] {
        let f = catalog(name, &q).unwrap().foliation;
        let d = inflection_divisor(&f).unwrap();
        println!("{name} (degree {}):", f.degree());
        println!("  invariant  {}", d.invariant_part);
        if d.transverse_part.is_empty() {
            println!("  convex");
        } else {
            println!("  transverse {}", d.transverse_part);
        }
    }
}
