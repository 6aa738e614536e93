//! Exact scalars and the dense linear algebra everything else is built on.
//!
//! There is no tolerance anywhere: equality of field elements is decidable and
//! every reduction is canonical, so subspaces compare by plain `==`.

mod field;
mod linalg;
mod matrix;
mod poly;
mod prime;
mod rational;

pub use field::{Field, FieldSpec};
pub use linalg::{
    inverse, krylov_minimal_polynomial, minimal_polynomial, nullspace, rank, rref, solve_linear, EchelonBuilder, Rref,
    Subspace,
};
pub use matrix::Matrix;
pub use poly::{coprime_pieces, crt_idempotents, CoprimePieces, UniPoly};
pub use prime::PrimeField;
pub use rational::Rationals;
