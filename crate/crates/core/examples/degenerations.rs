//! Degenerating Fermat and Hesse along each invariant line to a homogeneous foliation.

use foliations::classification::{degenerations, table1, verify_theorem_b_support};
use foliations::homogeneous::{catalog, CatalogName};
use foliations::numeric::NumberField;

fn main() {
    let k = NumberField::cube_roots_of_unity('w');
    let rows = table1();
    for name in [CatalogName::Fermat(4), CatalogName::Hesse] {
        let f = catalog(name, &k).unwrap().foliation;
        println!("{name}");
        for (result, class) in degenerations(&f, &k).unwrap() {
            let row = class
                .unique()
                .map(|i| rows[i - 1].representative.to_string())
                .unwrap_or_else(|| "?".into());
            println!(
                "  {:<28} {:<12} {row}  checks {}",
                result.line.to_string(),
                class.hom_type.to_string(),
                if result.checks.all() { "pass" } else { "FAIL" }
            );
        }
    }
    println!();
    println!("{}", verify_theorem_b_support());
}
