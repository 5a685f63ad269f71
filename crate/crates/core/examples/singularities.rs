//! Singular points of a foliation with their local invariants.

use foliations::foliation::local_invariants;
use foliations::classification::invariant_lines;
use foliations::homogeneous::{catalog, CatalogName};
use foliations::numeric::NumberField;

fn main() {
    let k = NumberField::cube_roots_of_unity('w');
    let f = catalog(CatalogName::Fermat(4), &k).unwrap().foliation;
    let inv = invariant_lines(&f, &k).unwrap();
    println!(
        "{} singular points, Milnor numbers add up to {} of {}",
        inv.singular.points.len(),
        inv.singular.milnor_total(),
        inv.singular.expected_total
    );
    for p in &inv.singular.points {
        let l = local_invariants(&inv.foliation, p, &inv.lines_through(p)).unwrap();
        let bb = l.bb.as_ref().map(|b| b.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:<28} mu {} nu {} tau {} lines {} BB {bb}{}",
            p.to_string(),
            l.mu,
            l.nu,
            l.tau,
            l.sigma,
            if l.is_radial() { "  radial" } else { "" }
        );
    }
}
