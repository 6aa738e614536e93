use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::idempotents::IdempotentData;
use super::radical::RadicalData;
use crate::algebra::Algebra;
use crate::arith::{rank, EchelonBuilder, Field, Matrix, PrimeField, Rationals, Subspace};
use crate::error::{Error, Result};

/// Integer matrix, row-major.
pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockRanks {
    pub q_rank: usize,
    /// Rank after reduction mod `p`; `None` in characteristic zero.
    pub p_rank: Option<usize>,
}

impl BlockRanks {
    /// Rank over the ground field.
    pub fn ground_rank(&self) -> usize {
        self.p_rank.unwrap_or(self.q_rank)
    }
}

/// Cartan matrix `C[λ][μ] = dim e_μ A e_λ`, cut into blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanReport {
    pub labels: Vec<String>,
    pub class_dims: Vec<usize>,
    pub matrix: IntMatrix,
    /// Class indices of each block.
    pub blocks: Vec<Vec<usize>>,
    pub per_block: Vec<IntMatrix>,
    pub ranks: Vec<BlockRanks>,
    pub characteristic: u32,
}

impl CartanReport {
    /// Rank of the whole matrix over the ground field.
    pub fn ground_rank(&self) -> usize {
        integer_rank(&self.matrix, self.p())
    }

    fn p(&self) -> Option<u32> {
        (self.characteristic != 0).then_some(self.characteristic)
    }

    /// `Σ C[λ][μ] dim L(λ) dim L(μ)`, which equals `dim A`.
    pub fn weighted_sum(&self) -> BigInt {
        let mut t = BigInt::zero();
        for (l, row) in self.matrix.iter().enumerate() {
            for (m, c) in row.iter().enumerate() {
                t += c * BigInt::from(self.class_dims[l] * self.class_dims[m]);
            }
        }
        t
    }
}

pub fn cartan_matrix<F: Field>(alg: &Algebra<F>, idem: &IdempotentData<F::Elem>) -> Result<CartanReport> {
    let f = alg.field();
    let reps = idem.representatives();
    let lefts: Vec<Matrix<F::Elem>> = reps.iter().map(|e| alg.left_matrix(e)).collect();
    let rights: Vec<Matrix<F::Elem>> = reps.iter().map(|e| alg.right_matrix(e)).collect();
    let r = reps.len();
    let mut matrix = vec![vec![BigInt::zero(); r]; r];
    for (l, right) in rights.iter().enumerate() {
        for (m, left) in lefts.iter().enumerate() {
            matrix[l][m] = BigInt::from(rank(f, &left.mul(f, right)));
        }
    }
    let blocks = idem.block_classes();
    let p = f.characteristic();
    let report = CartanReport {
        labels: idem.labels(),
        class_dims: idem.class_dims.clone(),
        per_block: blocks.iter().map(|b| submatrix(&matrix, b)).collect(),
        ranks: block_ranks(&matrix, &blocks, (p != 0).then_some(p)),
        matrix,
        blocks,
        characteristic: p,
    };
    if report.weighted_sum() != BigInt::from(alg.dim()) {
        return Err(Error::Internal(format!(
            "Cartan matrix accounts for dimension {}, algebra has {}",
            report.weighted_sum(),
            alg.dim()
        )));
    }
    Ok(report)
}

pub fn submatrix(m: &IntMatrix, idx: &[usize]) -> IntMatrix {
    idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// `[P(λ) : L(μ)]` from the radical layers `J^k e_λ / J^(k+1) e_λ` of `P(λ) = A e_λ`.
pub fn cartan_oracle<F: Field>(
    alg: &Algebra<F>,
    rad: &RadicalData<F>,
    idem: &IdempotentData<F::Elem>,
) -> Result<IntMatrix> {
    let f = alg.field();
    let n = alg.dim();
    let reps = idem.representatives();
    let r = reps.len();
    let mut out = vec![vec![BigInt::zero(); r]; r];
    for (l, el) in reps.iter().enumerate() {
        // W_0 = A e_λ, W_k = J^k e_λ
        let mut layers = vec![Subspace::from_vectors(f, n, (0..n).map(|i| alg.mul_basis_left(i, el)))];
        for power in &rad.powers {
            layers.push(Subspace::from_vectors(f, n, power.vectors().iter().map(|v| alg.mul(v, el))));
        }
        layers.push(Subspace::zero(f, n));
        for k in 0..layers.len() - 1 {
            let (w, below) = (&layers[k], &layers[k + 1]);
            if w.dim() == below.dim() {
                continue;
            }
            for (m, em) in reps.iter().enumerate() {
                let mut b = EchelonBuilder::new(f, n);
                for v in below.vectors() {
                    b.insert(&v);
                }
                let base = b.dim();
                for v in w.vectors() {
                    b.insert(&alg.mul(em, &v));
                }
                out[l][m] += BigInt::from(b.dim() - base);
            }
        }
    }
    Ok(out)
}

/// Rank of an integer matrix over `Q`, or over `F_p` after reduction.
pub fn integer_rank(m: &IntMatrix, p: Option<u32>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    match p {
        None => {
            let q = Rationals;
            let rows = m.iter().map(|r| r.iter().map(|v| q.from_bigint(v)).collect()).collect();
            rank(&q, &Matrix::from_rows(cols, rows).expect("rectangular"))
        }
        Some(p) => {
            let fp = PrimeField::new(p).expect("prime");
            let rows = m.iter().map(|r| r.iter().map(|v| fp.from_bigint(v)).collect()).collect();
            rank(&fp, &Matrix::from_rows(cols, rows).expect("rectangular"))
        }
    }
}

/// `(qRank, pRank)` of each diagonal block.
pub fn block_ranks(c: &IntMatrix, partition: &[Vec<usize>], p: Option<u32>) -> Vec<BlockRanks> {
    partition
        .iter()
        .map(|b| {
            let sub = submatrix(c, b);
            BlockRanks { q_rank: integer_rank(&sub, None), p_rank: p.map(|p| integer_rank(&sub, Some(p))) }
        })
        .collect()
}

/// Connected components of the graph with an edge `λ–μ` whenever `C[λ][μ] ≠ 0`.
pub fn zero_pattern_components(c: &IntMatrix) -> Vec<Vec<usize>> {
    let r = c.len();
    let mut comp = vec![usize::MAX; r];
    let mut out = Vec::new();
    for s in 0..r {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut stack = vec![s];
        let mut members = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for w in 0..r {
                if comp[w] == usize::MAX && (!c[v][w].is_zero() || !c[w][v].is_zero()) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Plain `usize` view of an integer matrix, for display.
pub fn to_usize(m: &IntMatrix) -> Vec<Vec<usize>> {
    m.iter().map(|r| r.iter().map(|v| v.to_usize().unwrap_or(usize::MAX)).collect()).collect()
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;
    use crate::catalog::{group_algebra, smash_algebra, symmetric_group_s3_table, truncated_polynomial};
    use crate::structure::{primitive_decomposition, radical};

    #[test]
    fn smash_cartan_and_oracle() {
        let a = smash_algebra(Rationals, 2).unwrap();
        let rad = radical(&a).unwrap();
        let idem = primitive_decomposition(&a, &rad, None, 0).unwrap();
        let c = cartan_matrix(&a, &idem).unwrap();
        assert_eq!(c.matrix, int_matrix(&[&[1, 1], &[1, 1]]));
        assert_eq!(c.blocks, vec![vec![0, 1]]);
        assert_eq!(c.ranks, vec![BlockRanks { q_rank: 1, p_rank: None }]);
        assert_eq!(cartan_oracle(&a, &rad, &idem).unwrap(), c.matrix);
    }

    #[test]
    fn truncated_cube_oracle() {
        let a = truncated_polynomial(Rationals, 3).unwrap();
        let rad = radical(&a).unwrap();
        let idem = primitive_decomposition(&a, &rad, None, 0).unwrap();
        assert_eq!(cartan_oracle(&a, &rad, &idem).unwrap(), int_matrix(&[&[3]]));
        assert_eq!(cartan_matrix(&a, &idem).unwrap().matrix, int_matrix(&[&[3]]));
    }

    #[test]
    fn semisimple_cartan_is_identity() {
        let q = Rationals;
        let a = group_algebra(q, &symmetric_group_s3_table()).unwrap();
        let rad = radical(&a).unwrap();
        let young = crate::catalog::s3_young_idempotents(&a);
        let idem = primitive_decomposition(&a, &rad, Some(&young), 0).unwrap();
        let c = cartan_matrix(&a, &idem).unwrap();
        assert_eq!(c.matrix, int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(cartan_oracle(&a, &rad, &idem).unwrap(), c.matrix);
        assert_eq!(c.weighted_sum(), BigInt::from(6));
    }

    #[test]
    fn block_rank_arithmetic() {
        let one_block = vec![vec![0, 1]];
        assert_eq!(
            block_ranks(&int_matrix(&[&[2, 2], &[2, 2]]), &one_block, Some(3)),
            vec![BlockRanks { q_rank: 1, p_rank: Some(1) }]
        );
        assert_eq!(
            block_ranks(&int_matrix(&[&[1]]), &[vec![0]], Some(3)),
            vec![BlockRanks { q_rank: 1, p_rank: Some(1) }]
        );
        assert_eq!(
            block_ranks(&int_matrix(&[&[5, 5], &[5, 5]]), &one_block, Some(5)),
            vec![BlockRanks { q_rank: 1, p_rank: Some(0) }]
        );
        assert_eq!(integer_rank(&int_matrix(&[&[2, 1], &[1, 2]]), None), 2);
        assert_eq!(integer_rank(&int_matrix(&[&[2, 1], &[1, 2]]), Some(3)), 1);
    }

    #[test]
    fn components_of_zero_pattern() {
        let c = int_matrix(&[&[2, 2, 0], &[2, 2, 0], &[0, 0, 1]]);
        assert_eq!(zero_pattern_components(&c), vec![vec![0, 1], vec![2]]);
    }
}
