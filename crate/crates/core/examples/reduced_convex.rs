//! Reduced convexity: 3d invariant lines, each singular point on tau + 1 of them.

use foliations::classification::reduced_convex_report;
use foliations::homogeneous::{catalog, CatalogName};
use foliations::numeric::NumberField;

fn main() {
    let k = NumberField::cube_roots_of_unity('w');
    for name in [CatalogName::Fermat(4), CatalogName::Hesse, CatalogName::F1(4)] {
        let f = catalog(name, &k).unwrap().foliation;
        match reduced_convex_report(&f, &k) {
            Ok(r) => {
                println!("{name}: {} invariant lines, reduced convex {}", r.line_count, r.is_reduced_convex);
                println!(
                    "  lines per point = tau + 1: {}, sum mu = {}, sum BB = {}",
                    r.lemma31_ok,
                    r.milnor_total,
                    r.bb_total.as_ref().map(|b| b.to_string()).unwrap_or_else(|| "-".into())
                );
                println!("  Camacho-Sad sums along every line equal 1: {}", r.cs_sums_are_one());
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}
