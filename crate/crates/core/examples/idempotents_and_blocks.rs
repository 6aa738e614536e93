//! Primitive and central primitive idempotents, found automatically.
//!
//! ```bash
//! cargo run --example idempotents_and_blocks -- 17
//! ```
//! The optional argument is the seed for the random splitting steps.

use rankone::catalog::{build_usl2, nakayama_algebra};
use rankone::structure::{primitive_decomposition, radical};
use rankone::PrimeField;

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let f = PrimeField::new(5).unwrap();

    let a = nakayama_algebra(f, 3, 2).unwrap();
    let rad = radical(&a).unwrap();
    let idem = primitive_decomposition(&a, &rad, None, seed).unwrap();
    println!("Nakayama algebra, 3 vertices, Loewy length 2");
    for (e, l) in idem.primitives.iter().zip(idem.labels()) {
        println!("  {l}: {}", a.format_element(e));
    }
    println!("  blocks {}", idem.central.len());

    let b = build_usl2(3).unwrap();
    let rad = radical(&b.algebra).unwrap();
    let idem = primitive_decomposition(&b.algebra, &rad, None, seed).unwrap();
    println!("u(sl2), p = 3: {} primitives in classes of dims {:?}", idem.primitives.len(), idem.class_dims);
    for (k, c) in idem.central.iter().enumerate() {
        let support = c.iter().filter(|x| **x != 0).count();
        println!("  central idempotent {k}: {support} nonzero coordinates");
    }
}
