//! Arithmetic in Q(w), w^2 + w + 1 = 0, and in a field read from text.

use foliations::numeric::NumberField;
use foliations::polynomial::{roots_in_field, UPoly};
use foliations::text::{parse_field, parse_scalar};

fn main() {
    let k = NumberField::cube_roots_of_unity('w');
    let w = k.generator();
    println!("{}", k.declaration());
    println!("w^3 = {}", w.pow(3));
    println!("1 / (w - 1) = {}", (&k.one() / &(&w - &k.one())));

    // x^3 - 1 splits completely once w is adjoined.
    let cubic = UPoly::new(&k, vec![k.int(-1), k.zero(), k.zero(), k.one()]);
    let roots = roots_in_field(&cubic).expect("roots");
    for (r, m) in &roots.roots {
        println!("root {r} with multiplicity {m}");
    }

    let s13 = parse_field("Q(s): s^2 - 13 = 0").expect("field");
    let r = parse_scalar("-(13 + 2 s) / 13", &s13).expect("scalar");
    println!("in {}: r = {r}, r^2 = {}", s13, r.pow(2));
}
