//! Group algebras: semisimple in coprime characteristic, not otherwise.

use rankone::catalog::{build_named_group, cyclic_group_table, group_algebra, symmetric_group_s3_table};
use rankone::report::{analyze, AnalyzeOptions};
use rankone::structure::radical;
use rankone::{PrimeField, Rationals};

fn main() {
    let s3 = build_named_group(Rationals, "group-s3").unwrap();
    let r = analyze(&s3, &AnalyzeOptions::default()).unwrap();
    println!("Q[S3]: simples {:?}, cartan {:?}", r.class_dims, r.cartan);

    for p in [2, 3, 5] {
        let f = PrimeField::new(p).unwrap();
        let a = group_algebra(f, &symmetric_group_s3_table()).unwrap();
        println!("F{p}[S3]: radical dim {}", radical(&a).unwrap().dim());
    }

    // F2[Z/4] is local: one simple, Cartan [[4]]
    let f2 = PrimeField::new(2).unwrap();
    let mut b = rankone::catalog::Bundle::new(group_algebra(f2, &cyclic_group_table(4)).unwrap());
    b.frobenius_form = Some(b.algebra.basis_vector(0));
    let r = analyze(&b, &AnalyzeOptions::default()).unwrap();
    println!("F2[Z/4]: cartan {:?}, p-rank {:?}, verdict {:?}", r.cartan, r.per_block[0].p_rank, r.verdict.global);
}
