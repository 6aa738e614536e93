//! Seeded random algebras over `F_5`, assembled from small known pieces and
//! hidden behind a random change of basis.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::families::{
    incidence_algebra, matrix_algebra, nakayama_algebra, nakayama_form, trace_form, truncated_polynomial,
    twisted_group_ring, upper_triangular_algebra,
};
use super::groups::{
    cyclic_group_table, dihedral_group_table, group_algebra, quaternion_group_table, symmetric_group_s3_table,
    GroupTable,
};
use crate::algebra::Algebra;
use crate::arith::{inverse, Field, Matrix, PrimeField};

/// Ground field characteristic of the random families.
pub const RANDOM_PRIME: u32 = 5;

/// Largest dimension produced.
pub const MAX_RANDOM_DIM: usize = 12;

#[derive(Clone, Debug)]
pub struct RandomAlgebra {
    pub description: String,
    pub algebra: Algebra<PrimeField>,
    /// A Frobenius form, when the construction supplies one.
    pub form: Option<Vec<u32>>,
}

type Piece = (String, Algebra<PrimeField>, Option<Vec<u32>>);

fn f5() -> PrimeField {
    PrimeField::new(RANDOM_PRIME).expect("prime")
}

fn group_piece(name: &str, g: GroupTable) -> Piece {
    let a = group_algebra(f5(), &g).expect("group algebra");
    let form = a.basis_vector(g.identity().expect("group"));
    (name.into(), a, Some(form))
}

/// Frobenius pieces of dimension at most `max`.
fn frobenius_pieces(max: usize) -> Vec<Piece> {
    let f = f5();
    let mut out = vec![
        group_piece("F5[Z2]", cyclic_group_table(2)),
        group_piece("F5[Z4]", cyclic_group_table(4)),
        group_piece("F5[Z2xZ2]", cyclic_group_table(2).direct_product(&cyclic_group_table(2))),
        group_piece("F5[Z5]", cyclic_group_table(5)),
        group_piece("F5[S3]", symmetric_group_s3_table()),
        group_piece("F5[D4]", dihedral_group_table(4)),
        group_piece("F5[Q8]", quaternion_group_table()),
        group_piece("F5[Z10]", cyclic_group_table(10)),
        group_piece("F5[D5]", dihedral_group_table(5)),
    ];
    for m in 1..=6 {
        let a = truncated_polynomial(f, m).expect("truncated");
        out.push((format!("F5[x]/(x^{m})"), a.clone(), Some(a.basis_vector(m - 1))));
    }
    for (k, zeta) in [(2usize, 4u32), (4, 2)] {
        for m in 1..=MAX_RANDOM_DIM / k {
            let a = twisted_group_ring(f, m, k, &zeta).expect("twisted");
            let form = a.basis_vector(k * (m - 1));
            out.push((format!("F5[x]/(x^{m}) # Z{k}"), a, Some(form)));
        }
    }
    for k in 1..=4 {
        for len in 1..=4 {
            if k * len <= MAX_RANDOM_DIM {
                let a = nakayama_algebra(f, k, len).expect("nakayama");
                out.push((format!("Nakayama({k},{len})"), a, Some(nakayama_form(&f, k, len))));
            }
        }
    }
    for m in 1..=3 {
        let t = truncated_polynomial(f, m).expect("truncated");
        let a = matrix_algebra(f, 2).expect("matrix").tensor(&t).expect("tensor");
        let form = tensor_form(&f, &trace_form(&f, 2), &t.basis_vector(m - 1));
        out.push((format!("M2 (x) F5[x]/(x^{m})"), a, Some(form)));
    }
    out.retain(|(_, a, _)| a.dim() <= max);
    out
}

/// Split pieces that need not be Frobenius.
fn split_pieces(rng: &mut ChaCha8Rng, max: usize) -> Vec<Piece> {
    let f = f5();
    let mut out = frobenius_pieces(max);
    for n in 2..=4 {
        out.push((format!("T{n}"), upper_triangular_algebra(f, n).expect("triangular"), None));
    }
    for _ in 0..4 {
        let k = rng.gen_range(2..=4);
        let leq = random_poset(rng, k);
        let a = incidence_algebra(f, &leq).expect("poset");
        out.push((format!("I(poset on {k})"), a, None));
    }
    out.retain(|(_, a, _)| a.dim() <= max);
    out
}

/// A random partial order on `0..k`, refining the natural order.
fn random_poset(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vec<bool>> {
    let mut leq: Vec<Vec<bool>> =
        (0..k).map(|a| (0..k).map(|b| a == b || (a < b && rng.gen_bool(0.5))).collect()).collect();
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if leq[a][m] && leq[m][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    leq
}

fn tensor_form(f: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().flat_map(|x| b.iter().map(move |y| f.mul(x, y))).collect()
}

fn combine(rng: &mut ChaCha8Rng, pieces: impl Fn(&mut ChaCha8Rng, usize) -> Vec<Piece>) -> Piece {
    let f = f5();
    let roll: f64 = rng.gen();
    let first = pieces(rng, MAX_RANDOM_DIM).choose(rng).cloned().expect("pieces");
    let room = MAX_RANDOM_DIM - first.1.dim();
    if roll < 0.25 && room >= 1 {
        let (n2, a2, l2) = pieces(rng, room).choose(rng).cloned().expect("pieces");
        let (n1, a1, l1) = first;
        let form = l1.zip(l2).map(|(x, y)| x.into_iter().chain(y).collect());
        return (format!("{n1} + {n2}"), a1.direct_sum(&a2).expect("sum"), form);
    }
    let quota = MAX_RANDOM_DIM / first.1.dim();
    if roll < 0.45 && quota >= 2 {
        let (n2, a2, l2) = pieces(rng, quota).choose(rng).cloned().expect("pieces");
        let (n1, a1, l1) = first;
        let form = l1.zip(l2).map(|(x, y)| tensor_form(&f, &x, &y));
        return (format!("{n1} (x) {n2}"), a1.tensor(&a2).expect("tensor"), form);
    }
    first
}

/// An invertible matrix with entries drawn from `-2..=2`.
pub fn random_invertible<F: Field>(field: &F, n: usize, rng: &mut impl Rng) -> Matrix<F::Elem> {
    loop {
        let data = (0..n * n).map(|_| field.from_i64(rng.gen_range(-2..=2))).collect();
        let m = Matrix::from_vec(n, n, data).expect("square");
        if inverse(field, &m).is_some() {
            return m;
        }
    }
}

/// Moves an algebra and a form to the basis given by the columns of a random
/// invertible matrix; the form transforms as `λ' = Pᵀ λ`.
pub fn random_basis_change<F: Field>(
    alg: &Algebra<F>,
    form: Option<&[F::Elem]>,
    rng: &mut impl Rng,
) -> (Algebra<F>, Option<Vec<F::Elem>>, Matrix<F::Elem>) {
    let f = alg.field();
    let p = random_invertible(f, alg.dim(), rng);
    let changed = alg.change_basis(&p).expect("invertible change of basis");
    let form = form.map(|l| p.transpose().mul_vec(f, l));
    (changed, form, p)
}

fn finish(rng: &mut ChaCha8Rng, (description, alg, form): Piece) -> RandomAlgebra {
    let (algebra, form, _) = random_basis_change(&alg, form.as_deref(), rng);
    RandomAlgebra { description, algebra, form }
}

/// A Frobenius algebra over `F_5` of dimension at most 12, with a form.
pub fn random_frobenius_algebra(seed: u64) -> RandomAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let piece = combine(&mut rng, |_, max| frobenius_pieces(max));
    finish(&mut rng, piece)
}

/// A split algebra over `F_5` of dimension at most 12, not necessarily Frobenius.
pub fn random_split_algebra(seed: u64) -> RandomAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5151_5151);
    let piece = combine(&mut rng, split_pieces);
    finish(&mut rng, piece)
}
