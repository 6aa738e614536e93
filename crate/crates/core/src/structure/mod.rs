//! Radical, idempotents, blocks, Cartan matrices and socles.

mod cartan;
mod idempotents;
mod radical;
mod socle;

pub use cartan::{
    block_ranks, cartan_matrix, cartan_oracle, int_matrix, integer_rank, submatrix, to_usize, zero_pattern_components,
    BlockRanks, CartanReport, IntMatrix,
};
pub use idempotents::{
    blocks, check_complete, corner_dim, primitive_decomposition, split_check, split_commutative, IdempotentData,
    RETRY_BUDGET,
};
pub use radical::{
    ideal_powers, lift_idempotent, lift_orthogonal, newton_idempotent, quotient_algebra, radical, radical_subspace,
    RadicalData,
};
pub use socle::{commutative_radical, socle, socle_over, SocleOver};
