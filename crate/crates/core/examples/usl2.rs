//! The restricted enveloping algebra `u(sl2)` in characteristic `p`.
//!
//! ```bash
//! cargo run --release --example usl2 -- 5
//! ```

use std::time::Instant;

use rankone::catalog::build_usl2;
use rankone::report::{analyze, AnalyzeOptions};

fn main() {
    let p: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let start = Instant::now();
    let bundle = build_usl2(p).unwrap();
    let r = analyze(&bundle, &AnalyzeOptions::default()).unwrap();
    println!("u(sl2) over F{p}: dim {}, radical {}, centre {}", r.dim, r.radical_dim, r.centre_dim);
    println!("simples of dims {:?}", r.class_dims);
    for b in &r.per_block {
        println!("  block {:?}: C = {:?}, rank {} (mod p {:?})", b.classes, b.cartan, b.q_rank, b.p_rank);
    }
    println!("dim Im τ = {:?}, blocks = {}", r.higman_image_dim, r.blocks);
    println!("{:?} in {:.2?}", r.verdict.global, start.elapsed());
}
