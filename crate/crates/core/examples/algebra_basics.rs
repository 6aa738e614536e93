//! Structure constants, products, the centre and validation.
//!
//! Builds the four-dimensional smash product `k[x]/(x^2) # Z/2` and prints
//! its multiplication table, then breaks one constant and shows the
//! violation that validation reports.

use rankone::catalog::smash_algebra;
use rankone::{Algebra, Field, Rationals};

fn main() {
    let q = Rationals;
    let a = smash_algebra(q, 2).unwrap();
    println!("basis {:?}", a.labels());
    for i in 0..a.dim() {
        let row: Vec<String> =
            (0..a.dim()).map(|j| a.format_element(&a.mul(&a.basis_vector(i), &a.basis_vector(j)))).collect();
        println!("  {:>3} | {}", a.labels()[i], row.join("  "));
    }
    a.validate().expect("associative and unital");
    println!("centre dim {}", a.centre().dim());
    println!("commutator space dim {}", a.commutator_space().dim());
    println!("commutative: {}", a.is_commutative());

    // s·x = -x·s; make it +x·s instead
    let n = a.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let t = if (i, j) == (1, 2) { vec![(3, q.one())] } else { a.product(i, j).to_vec() };
            products.push((i, j, t));
        }
    }
    let broken = Algebra::new(q, a.labels().to_vec(), a.unit().to_vec(), products).unwrap();
    match broken.validate() {
        Ok(()) => println!("still associative"),
        Err(v) => println!("{v} (indices {:?})", v.indices),
    }
}
