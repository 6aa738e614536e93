//! Writes a bundle to the JSON file format and reads it back.

use rankone::catalog::{build_rrca_c2, AnyBundle};
use rankone::format::{parse_bundle, write_any};
use rankone::{Field, PrimeField};

fn main() {
    let f = PrimeField::new(5).unwrap();
    let b: AnyBundle = build_rrca_c2(f, &f.from_i64(1)).unwrap().into();
    let text = write_any(&b);
    println!("{text}");
    let back = parse_bundle(&text).unwrap();
    assert_eq!(back, b);
    assert_eq!(write_any(&back), text);
    eprintln!("round trip is exact ({} bytes)", text.len());
}
