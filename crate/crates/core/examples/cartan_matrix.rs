//! Cartan matrices with their per-block ranks, cross-checked against radical layers.

use rankone::catalog::{incidence_algebra, nakayama_algebra, smash_algebra};
use rankone::structure::{cartan_matrix, cartan_oracle, primitive_decomposition, radical, to_usize};
use rankone::{Algebra, Field, PrimeField, Rationals};

fn report<F: Field>(name: &str, a: &Algebra<F>) {
    let rad = radical(a).unwrap();
    let idem = primitive_decomposition(a, &rad, None, 0).unwrap();
    let c = cartan_matrix(a, &idem).unwrap();
    let layers = cartan_oracle(a, &rad, &idem).unwrap();
    println!("{name}: C = {:?}", to_usize(&c.matrix));
    for (b, r) in c.blocks.iter().zip(&c.ranks) {
        println!("  block {b:?}: rank {} over Q, {:?} mod p", r.q_rank, r.p_rank);
    }
    println!("  radical layers agree: {}", layers == c.matrix);
}

fn main() {
    report("smash n=2", &smash_algebra(Rationals, 2).unwrap());
    report("smash n=3", &smash_algebra(Rationals, 3).unwrap());
    report("Nakayama 2x3 over F5", &nakayama_algebra(PrimeField::new(5).unwrap(), 2, 3).unwrap());
    // the poset a < c > b
    let leq = vec![vec![true, false, true], vec![false, true, true], vec![false, false, true]];
    report("incidence algebra", &incidence_algebra(Rationals, &leq).unwrap());
}
