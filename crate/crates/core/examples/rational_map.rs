//! The self-map of the sphere attached to a homogeneous foliation: fixed points are the
//! directions of the tangent cone, critical ones the radial points and inflection lines.

use foliations::homogeneous::{catalog, gmap, gmap_analysis, gmap_coherence, CatalogName};
use foliations::numeric::NumberField;

fn main() {
    let k = NumberField::cube_roots_of_unity('w');
    for name in [CatalogName::Omega(1), CatalogName::Omega(2), CatalogName::Example5] {
        let h = catalog(name, &k).unwrap().hom.unwrap();
        let g = gmap(&h).unwrap();
        let a = gmap_analysis(&g).unwrap();
        let show = |v: &[(foliations::homogeneous::SpherePoint, u32)]| {
            v.iter().map(|(p, m)| format!("{p}^{m}")).collect::<Vec<_>>().join(", ")
        };
        println!("{name}: z -> {g}");
        println!("  fixed    {}", show(&a.fixed));
        println!("  critical {}", show(&a.critical));
        println!("  coherent with the foliation: {}", gmap_coherence(&h).unwrap().holds());
    }
}
