//! Exact pullback identities between normal forms and the catalog representatives.

use foliations::classification::{hesse_closing_identity, omega4_pullback_identity, omega5_pullback_identity};

fn main() {
    let checks = [
        ("fourth form, c = (-3 + sqrt 5)/8", omega4_pullback_identity(1)),
        ("fourth form, c = (-3 - sqrt 5)/8", omega4_pullback_identity(-1)),
        ("fifth form over Q(a)", omega5_pullback_identity()),
        ("Hesse pencil over Q(r)", hesse_closing_identity()),
    ];
    for (name, r) in checks {
        match r {
            Ok((true, _)) => println!("{name}: holds"),
            Ok((false, detail)) => println!("{name}: fails, {detail}"),
            Err(e) => println!("{name}: error {e}"),
        }
    }
}
