use serde::Serialize;

use crate::structure::CartanReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockVerdict {
    #[serde(rename = "rank-one-confirmed")]
    RankOneConfirmed,
    #[serde(rename = "p-rank-zero-hypothesis-failed")]
    PRankZeroHypothesisFailed,
    #[serde(rename = "rank-one-violated")]
    RankOneViolated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GlobalVerdict {
    #[serde(rename = "consistent-with-theorem")]
    ConsistentWithTheorem,
    #[serde(rename = "hypothesis-(5)-failed")]
    HypothesisFiveFailed,
    /// A flag for inspection, not a refutation: the ring-level hypotheses
    /// behind the rank-one statement cannot be checked from `A` alone.
    #[serde(rename = "counterexample-candidate")]
    CounterexampleCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub global: GlobalVerdict,
    pub per_block: Vec<BlockVerdict>,
}

impl Verdict {
    pub fn violated(&self) -> bool {
        self.per_block.contains(&BlockVerdict::RankOneViolated)
    }
}

/// Classifies each block by its rank over the ground field.
pub fn rank_one_verdict(cartan: &CartanReport) -> Verdict {
    let per_block: Vec<BlockVerdict> = cartan
        .ranks
        .iter()
        .map(|r| match r.ground_rank() {
            0 => BlockVerdict::PRankZeroHypothesisFailed,
            1 => BlockVerdict::RankOneConfirmed,
            _ => BlockVerdict::RankOneViolated,
        })
        .collect();
    let global = if per_block.contains(&BlockVerdict::PRankZeroHypothesisFailed) {
        GlobalVerdict::HypothesisFiveFailed
    } else if per_block.contains(&BlockVerdict::RankOneViolated) {
        GlobalVerdict::CounterexampleCandidate
    } else {
        GlobalVerdict::ConsistentWithTheorem
    };
    Verdict { global, per_block }
}
