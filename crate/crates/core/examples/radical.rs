//! Jacobson radical, its powers, and the semisimple quotient.
//!
//! In characteristic zero the radical is the kernel of the trace form; in
//! characteristic `p` a chain of `p`-power trace kernels is used instead.

use rankone::catalog::{truncated_polynomial, upper_triangular_algebra, usl2_algebra};
use rankone::structure::radical;
use rankone::{Field, PrimeField, Rationals};

fn main() {
    let t3 = upper_triangular_algebra(Rationals, 3).unwrap();
    let rad = radical(&t3).unwrap();
    println!("T3: dim {}, radical {}, nilpotency index {}", t3.dim(), rad.dim(), rad.nilpotency_index);
    for v in rad.radical.vectors() {
        println!("  {}", t3.format_element(&v));
    }
    println!("  quotient dim {}, commutative {}", rad.quotient.dim(), rad.quotient.is_commutative());

    let f = PrimeField::new(3).unwrap();
    let a = truncated_polynomial(f, 4).unwrap();
    let rad = radical(&a).unwrap();
    println!("F3[x]/(x^4): radical powers {:?}", rad.powers.iter().map(|p| p.dim()).collect::<Vec<_>>());

    let u = usl2_algebra(3).unwrap();
    let rad = radical(&u).unwrap();
    println!("u(sl2) at p = 3: dim {}, radical {}, quotient dim {}", u.dim(), rad.dim(), rad.quotient.dim());
    println!("  characteristic {}", u.field().characteristic());
}
