//! Baby Verma modules for the restricted rational Cherednik algebra of `Z/2`
//! and the reciprocity `C = MᵀM`.
//!
//! ```bash
//! cargo run --example cherednik_bgg -- 0
//! cargo run --example cherednik_bgg -- 1
//! ```

use rankone::catalog::build_rrca_c2;
use rankone::report::{analyze, AnalyzeOptions};
use rankone::{Field, Rationals};

fn main() {
    let c = std::env::args().nth(1).unwrap_or_else(|| "1".into());
    let q = Rationals;
    let bundle = build_rrca_c2(q, &q.parse(&c).unwrap()).unwrap();
    println!("basis {:?}", bundle.algebra.labels());
    for m in &bundle.modules {
        println!("module {} of dim {}", m.name, m.dim());
    }
    let r = analyze(&bundle, &AnalyzeOptions::default()).unwrap();
    let m = r.multiplicity.as_ref().unwrap();
    println!("c = {c}: blocks {}, C = {:?}", r.blocks, r.cartan);
    println!("M = {:?} for {:?}", m.matrix, m.vermas);
    println!("C = MᵀM: {}, proportional rows: {}, ranks per block {:?}", m.bgg_holds, m.proportional_holds, m.block_ranks);
}
