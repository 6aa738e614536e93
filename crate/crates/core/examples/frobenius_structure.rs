//! Frobenius forms, dual bases, the Nakayama automorphism and the
//! Higman and Casimir maps for the small smash product.

use rankone::catalog::{smash_algebra, smash_form, upper_triangular_algebra};
use rankone::frobenius::{
    casimir_map, dual_bases, find_frobenius_form, higman_map, nakayama_automorphism, nakayama_centre, FormSearch,
};
use rankone::{Field, Rationals};

fn main() {
    let q = Rationals;
    let a = smash_algebra(q, 2).unwrap();
    let frob = dual_bases(&a, &smash_form(&a, 2)).unwrap();
    println!("Gram matrix {:?}", frob.gram.format(&q));
    for (l, h) in a.labels().iter().zip(&frob.right_dual) {
        println!("  dual of {l}: {}", a.format_element(h));
    }
    let nak = nakayama_automorphism(&a, &frob).unwrap();
    println!("Nakayama order {:?}, symmetric form {}", nak.order, frob.is_symmetric());
    for i in 0..a.dim() {
        println!("  α({}) = {}", a.labels()[i], a.format_element(&nak.matrix.column(i)));
    }
    let z = nakayama_centre(&a, &nak).unwrap();
    println!("Nakayama centre dim {}", z.dim());

    let tau = higman_map(&a, &frob);
    let cas = casimir_map(&a, &frob);
    println!("τ(1) = {}", a.format_element(&tau.apply(&q, a.unit())));
    println!("dim Im τ = {}, Im τ ⊆ Z(A): {}", tau.image.dim(), tau.image.is_subspace_of(&q, &a.centre()));
    println!("q is zero: {}", cas.matrix.is_zero(&q));

    // without a known form, search for one
    match find_frobenius_form(&a, 1, 8) {
        FormSearch::Found { lambda, trial } => {
            println!("searched form {:?} at trial {trial}", lambda.iter().map(|c| q.format(c)).collect::<Vec<_>>())
        }
        FormSearch::NotFound { trials } => println!("no form in {trials} trials"),
    }
    let t2 = upper_triangular_algebra(q, 2).unwrap();
    println!("upper triangular 2x2: {:?}", find_frobenius_form(&t2, 0, 16));
}
