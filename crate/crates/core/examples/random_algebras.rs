//! Seeded random Frobenius algebras over `F_5`, checking `dim Im τ = rank C`.

use rankone::catalog::random::random_frobenius_algebra;
use rankone::catalog::Bundle;
use rankone::report::{analyze, AnalyzeOptions};

fn main() {
    let count: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let mut agree = 0;
    for seed in 0..count {
        let r = random_frobenius_algebra(seed);
        let mut b = Bundle::new(r.algebra);
        b.frobenius_form = r.form;
        let rep = analyze(&b, &AnalyzeOptions::default()).unwrap();
        let ok = rep.identity_checks["lorenzFitzgerald"];
        agree += usize::from(ok);
        println!(
            "{seed:>3} dim {:>2} blocks {} dim Im τ {} {:<40} {}",
            rep.dim,
            rep.blocks,
            rep.higman_image_dim.unwrap(),
            r.description,
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    println!("{agree}/{count} agree");
}
