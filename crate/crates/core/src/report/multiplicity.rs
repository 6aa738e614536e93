use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{idempotent_multiplicity, Algebra, ModulePresentation};
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::structure::{integer_rank, submatrix, to_usize, CartanReport, IdempotentData, IntMatrix};

/// Standard-module multiplicities `M[λ][μ] = [Δ(λ) : L(μ)]` and the checks built on them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MultiplicityReport {
    pub vermas: Vec<String>,
    pub matrix: Vec<Vec<usize>>,
    /// Block of each module, from its composition factors.
    pub verma_blocks: Vec<Option<usize>>,
    /// `rank M` restricted to each block, over `Q`.
    pub block_ranks: Vec<usize>,
    pub bgg_holds: bool,
    pub proportional_holds: bool,
    pub rank_equivalence_holds: bool,
}

pub fn multiplicity_report<F: Field>(
    alg: &Algebra<F>,
    vermas: &[&ModulePresentation<F>],
    idem: &IdempotentData<F::Elem>,
    cartan: &CartanReport,
) -> Result<MultiplicityReport> {
    for m in vermas {
        m.validate(alg).map_err(Error::Violation)?;
    }
    let reps = idem.representatives();
    let r = reps.len();
    let mut m = vec![vec![BigInt::zero(); r]; vermas.len()];
    for (l, d) in vermas.iter().enumerate() {
        for (mu, e) in reps.iter().enumerate() {
            m[l][mu] = BigInt::from(idempotent_multiplicity(alg, e, d)?);
        }
    }
    // MᵀM
    let mut mtm = vec![vec![BigInt::zero(); r]; r];
    for row in &m {
        for a in 0..r {
            for b in 0..r {
                mtm[a][b] += &row[a] * &row[b];
            }
        }
    }
    let bgg_holds = mtm == cartan.matrix;

    let verma_blocks: Vec<Option<usize>> = m
        .iter()
        .map(|row| {
            let mut bs = (0..r).filter(|&mu| !row[mu].is_zero()).map(|mu| idem.block_of[mu]);
            let first = bs.next()?;
            bs.all(|b| b == first).then_some(first)
        })
        .collect();
    let dims: Vec<BigInt> = vermas.iter().map(|d| BigInt::from(d.dim())).collect();
    let mut proportional_holds = verma_blocks.iter().all(Option::is_some);
    for l in 0..vermas.len() {
        for mu in 0..vermas.len() {
            if verma_blocks[l] != verma_blocks[mu] {
                continue;
            }
            for rho in 0..r {
                if &m[l][rho] * &dims[mu] != &m[mu][rho] * &dims[l] {
                    proportional_holds = false;
                }
            }
        }
    }

    let mut block_ranks = Vec::new();
    let mut rank_equivalence_holds = true;
    for (b, classes) in cartan.blocks.iter().enumerate() {
        let rows: IntMatrix = (0..vermas.len())
            .filter(|&l| verma_blocks[l] == Some(b))
            .map(|l| classes.iter().map(|&mu| m[l][mu].clone()).collect())
            .collect();
        let rm = integer_rank(&rows, None);
        let rc = integer_rank(&submatrix(&cartan.matrix, classes), None);
        rank_equivalence_holds &= (rm == 1) == (rc == 1);
        block_ranks.push(rm);
    }
    Ok(MultiplicityReport {
        vermas: vermas.iter().map(|d| d.name.clone()).collect(),
        matrix: to_usize(&m),
        verma_blocks,
        block_ranks,
        bgg_holds,
        proportional_holds,
        rank_equivalence_holds,
    })
}
