//! Row reduction, kernels, inverses and minimal polynomials over `Q` and `F_p`.
//!
//! ```bash
//! cargo run --example exact_arithmetic
//! ```

use rankone::arith::{inverse, minimal_polynomial, nullspace, rref};
use rankone::{Field, Matrix, PrimeField, Rationals};

fn show<F: Field>(f: &F, name: &str, rows: &[&[i64]]) {
    let cols = rows[0].len();
    let m = Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()).unwrap();
    let r = rref(f, &m);
    println!("{name} over {}: rank {}, pivots {:?}", f.spec(), r.rank, r.pivots);
    for row in r.matrix.format(f) {
        println!("  {}", row.join(" "));
    }
    let ker = nullspace(f, &m);
    println!("  kernel dim {}", ker.dim());
    if m.is_square() {
        match inverse(f, &m) {
            Some(inv) => println!("  inverse {:?}", inv.format(f)),
            None => println!("  singular"),
        }
        println!("  minimal polynomial {}", minimal_polynomial(f, &m).format(f));
    }
}

fn main() {
    let a: &[&[i64]] = &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]];
    show(&Rationals, "A", a);
    // det A = 18, so A is singular mod 3 but not mod 5
    show(&PrimeField::new(3).unwrap(), "A", a);
    show(&PrimeField::new(5).unwrap(), "A", a);

    let f = PrimeField::new(7).unwrap();
    let x4 = rankone::UniPoly::new(&f, vec![f.from_i64(-1), f.zero(), f.zero(), f.zero(), f.one()]);
    println!("roots of x^4 - 1 over F7: {:?}", f.roots(&x4));
}
