//! The end-to-end analysis and its machine-readable report.

mod multiplicity;
mod verdict;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub use multiplicity::{multiplicity_report, MultiplicityReport};
pub use verdict::{rank_one_verdict, BlockVerdict, GlobalVerdict, Verdict};

use crate::algebra::ModulePresentation;
use crate::arith::{Field, Matrix, Subspace};
use crate::catalog::{AnyBundle, Bundle, Expected};
use crate::error::{Error, Result};
use crate::frobenius::{
    casimir_map, dual_bases, find_frobenius_form, higman_map, nakayama_automorphism, nakayama_centre, FormSearch,
    FrobeniusStructure, LinearMap, NakayamaData,
};
use crate::structure::{
    cartan_matrix, cartan_oracle, primitive_decomposition, radical, socle, socle_over, split_check, to_usize,
    zero_pattern_components, CartanReport, IdempotentData, RadicalData,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub seed: u64,
    /// Use the bundle's idempotents when it has them.
    pub use_supplied_idempotents: bool,
    /// Trials for the Frobenius form search when the bundle has no form.
    pub form_trials: usize,
    /// Modules to treat as standard modules, in order; all of them if `None`.
    pub vermas: Option<Vec<String>>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self { seed: 0, use_supplied_idempotents: true, form_trials: 32, vermas: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BlockReport {
    pub classes: Vec<String>,
    pub cartan: Vec<Vec<usize>>,
    pub q_rank: usize,
    pub p_rank: Option<usize>,
    pub verdict: BlockVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FrobeniusReport {
    /// `supplied`, `searched, seed = S, trial = T`, or a not-found note.
    pub source: String,
    pub form: Option<Vec<String>>,
    pub symmetric: Option<bool>,
    pub nakayama_order: Option<usize>,
    pub twisted_centre_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub radical_dim: usize,
    pub nilpotency_index: usize,
    pub centre_dim: usize,
    pub commutator_dim: usize,
    pub socle_dim: usize,
    pub blocks: usize,
    pub class_labels: Vec<String>,
    pub class_dims: Vec<usize>,
    pub cartan: Vec<Vec<usize>>,
    pub per_block: Vec<BlockReport>,
    pub frobenius: FrobeniusReport,
    pub higman_image_dim: Option<usize>,
    pub casimir_image_dim: Option<usize>,
    pub casimir_is_zero: Option<bool>,
    pub tau_image_central: Option<bool>,
    /// Identities that hold for every split algebra; any `false` is a failure.
    pub identity_checks: BTreeMap<String, bool>,
    /// Consequences expected only under the rank-one property; informational.
    pub consequence_checks: BTreeMap<String, bool>,
    pub multiplicity: Option<MultiplicityReport>,
    pub verdict: Verdict,
    /// Agreement with the bundle's expected values, by key.
    pub expected: BTreeMap<String, bool>,
}

impl AnalysisReport {
    /// Sorted-key JSON.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("json")
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.identity_checks.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k.as_str()).collect()
    }

    pub fn failed_expectations(&self) -> Vec<&str> {
        self.expected.iter().filter(|(_, ok)| !**ok).map(|(k, _)| k.as_str()).collect()
    }

    /// 0 when everything holds (or is merely informational), 1 when a block
    /// violates rank one, an identity check fails, or an expected value disagrees.
    pub fn exit_code(&self) -> i32 {
        let bad = self.verdict.violated() || !self.failed_checks().is_empty() || !self.failed_expectations().is_empty();
        i32::from(bad)
    }

    /// Looks up a dotted path such as `multiplicity.matrix`.
    pub fn lookup(&self, path: &str) -> Option<Value> {
        let v = serde_json::to_value(self).ok()?;
        path.split('.').try_fold(v, |v, k| v.get(k).cloned())
    }

    /// Plain-text summary for terminals.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let line = |s: &mut String, t: String| {
            s.push_str(&t);
            s.push('\n');
        };
        line(&mut s, format!("algebra      dim {} over {}", self.dim, self.field));
        line(&mut s, format!("radical      dim {}, nilpotency index {}", self.radical_dim, self.nilpotency_index));
        line(&mut s, format!("centre       dim {}", self.centre_dim));
        line(&mut s, format!("simples      {} with dims {:?}", self.class_dims.len(), self.class_dims));
        line(&mut s, format!("blocks       {}", self.blocks));
        line(&mut s, format!("cartan       {:?}", self.cartan));
        for (i, b) in self.per_block.iter().enumerate() {
            let p = b.p_rank.map(|r| format!(", p-rank {r}")).unwrap_or_default();
            line(&mut s, format!("  block {i}    {:?} rank {}{p}: {}", b.classes, b.q_rank, json_str(&b.verdict)));
        }
        line(&mut s, format!("form         {}", self.frobenius.source));
        if let Some(d) = self.higman_image_dim {
            line(&mut s, format!("higman image dim {d}, casimir image dim {}", self.casimir_image_dim.unwrap_or(0)));
        }
        if let Some(m) = &self.multiplicity {
            line(&mut s, format!("multiplicity {:?} (BGG {}, proportional {})", m.matrix, m.bgg_holds, m.proportional_holds));
        }
        for (k, ok) in &self.identity_checks {
            line(&mut s, format!("  [{}] {k}", if *ok { "ok" } else { "FAIL" }));
        }
        for (k, ok) in &self.expected {
            line(&mut s, format!("  [{}] expected {k}", if *ok { "ok" } else { "FAIL" }));
        }
        line(&mut s, format!("verdict      {}", json_str(&self.verdict.global)));
        s
    }
}

fn json_str(v: &impl Serialize) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        Ok(v) => v.to_string(),
        Err(_) => String::new(),
    }
}

/// Frobenius data used by an analysis.
#[derive(Clone, Debug)]
pub struct FrobeniusData<F: Field> {
    pub structure: FrobeniusStructure<F>,
    pub nakayama: NakayamaData<F::Elem>,
    pub twisted_centre: Subspace<F::Elem>,
    pub higman: LinearMap<F::Elem>,
    pub casimir: LinearMap<F::Elem>,
}

/// Everything computed along the way, with the report.
#[derive(Clone, Debug)]
pub struct Analysis<F: Field> {
    pub radical: RadicalData<F>,
    pub idempotents: IdempotentData<F::Elem>,
    pub cartan: CartanReport,
    pub centre: Subspace<F::Elem>,
    pub socle: Subspace<F::Elem>,
    pub frobenius: Option<FrobeniusData<F>>,
    pub report: AnalysisReport,
}

pub fn analyze<F: Field>(bundle: &Bundle<F>, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    run(bundle, opts).map(|a| a.report)
}

pub fn analyze_any(bundle: &AnyBundle, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    match bundle {
        AnyBundle::Q(b) => analyze(b, opts),
        AnyBundle::Fp(b) => analyze(b, opts),
    }
}

fn contained<F: Field>(f: &F, a: &Subspace<F::Elem>, b: &Subspace<F::Elem>) -> bool {
    a.is_subspace_of(f, b)
}

fn kills<F: Field>(f: &F, map: &LinearMap<F::Elem>, space: &Subspace<F::Elem>) -> bool {
    space.vectors().iter().all(|v| map.apply(f, v).iter().all(|c| f.is_zero(c)))
}

/// Runs the full pipeline: radical, idempotents, blocks, Cartan matrix,
/// Frobenius structure, Higman and Casimir maps, identity checks, verdicts.
pub fn run<F: Field>(bundle: &Bundle<F>, opts: &AnalyzeOptions) -> Result<Analysis<F>> {
    bundle.validate()?;
    let alg = &bundle.algebra;
    let f = alg.field();
    let n = alg.dim();

    let rad = radical(alg)?;
    let supplied = if opts.use_supplied_idempotents { bundle.idempotents.as_deref() } else { None };
    let idem = primitive_decomposition(alg, &rad, supplied, opts.seed)?;
    split_check(&rad, &idem)?;
    let cartan = cartan_matrix(alg, &idem)?;
    let oracle = cartan_oracle(alg, &rad, &idem)?;
    let centre = alg.centre();
    let soc = socle(alg, &rad);
    let verdict = rank_one_verdict(&cartan);
    let ground_rank = cartan.ground_rank();

    let mut checks = BTreeMap::new();
    let mut consequences = BTreeMap::new();
    checks.insert("cartanMatchesOracle".to_string(), oracle == cartan.matrix);
    checks.insert("cartanDimensionSum".to_string(), cartan.weighted_sum() == n.into());
    let coherent = (0..cartan.matrix.len()).all(|l| {
        (0..cartan.matrix.len()).all(|m| idem.block_of[l] == idem.block_of[m] || cartan.matrix[l][m] == 0u32.into())
    });
    checks.insert("blockCoherence".to_string(), coherent);
    checks.insert(
        "blocksMatchZeroPattern".to_string(),
        zero_pattern_components(&cartan.matrix).len() == idem.central.len(),
    );
    let projective_total: usize = idem
        .primitives
        .iter()
        .map(|e| Subspace::from_vectors(f, n, (0..n).map(|k| alg.mul_basis_left(k, e))).dim())
        .sum();
    checks.insert("decompositionComplete".to_string(), projective_total == n);

    // Over a commutative Frobenius centre, the socle length counts the blocks.
    let centre_alg = alg.subalgebra(&centre)?;
    if let FormSearch::Found { .. } = find_frobenius_form(&centre_alg, opts.seed, 8) {
        let s = socle_over(alg, &centre, &centre)?;
        checks.insert("centreSocleCountsBlocks".to_string(), s.length == idem.central.len());
    }

    let (form, source) = match &bundle.frobenius_form {
        Some(l) => (Some(l.clone()), "supplied".to_string()),
        None => match find_frobenius_form(alg, opts.seed, opts.form_trials) {
            FormSearch::Found { lambda, trial } => {
                (Some(lambda), format!("searched, seed = {}, trial = {trial}", opts.seed))
            }
            FormSearch::NotFound { trials } => {
                (None, format!("searched, seed = {}: no form in {trials} trials (inconclusive)", opts.seed))
            }
        },
    };
    let mut frobenius = None;
    let mut freport =
        FrobeniusReport { source, form: None, symmetric: None, nakayama_order: None, twisted_centre_dim: None };
    let (mut higman_dim, mut casimir_dim, mut casimir_zero, mut tau_central) = (None, None, None, None);
    if let Some(lambda) = form {
        let structure = dual_bases(alg, &lambda)?;
        let nakayama = nakayama_automorphism(alg, &structure)?;
        let tz = nakayama_centre(alg, &nakayama)?;
        let tau = higman_map(alg, &structure);
        let q = casimir_map(alg, &structure);
        let f = alg.field();
        checks.insert("lorenzFitzgerald".into(), tau.image.dim() == ground_rank);
        checks.insert("higmanImageInSocle".into(), contained(f, &tau.image, &soc));
        checks.insert("higmanImageInTwistedCentre".into(), contained(f, &tau.image, &tz));
        checks.insert("casimirImageInCentre".into(), contained(f, &q.image, &centre));
        checks.insert("casimirImageInSocle".into(), contained(f, &q.image, &soc));
        checks.insert("higmanVanishesOnRadical".into(), kills(f, &tau, &rad.radical));
        checks.insert("casimirVanishesOnRadical".into(), kills(f, &q, &rad.radical));
        let fixes = centre.vectors().iter().all(|z| nakayama.matrix.mul_vec(f, z) == *z);
        checks.insert("nakayamaFixesCentre".into(), fixes);
        if structure.is_symmetric() {
            checks.insert("symmetricFormGivesEqualMaps".into(), tau.matrix == q.matrix);
            checks.insert("symmetricFormHasTrivialNakayama".into(), nakayama.matrix == Matrix::identity(f, n));
        }
        consequences.insert("higmanDimEqualsBlocks".to_string(), tau.image.dim() == idem.central.len());
        higman_dim = Some(tau.image.dim());
        casimir_dim = Some(q.image.dim());
        casimir_zero = Some(q.matrix.is_zero(f));
        tau_central = Some(contained(f, &tau.image, &centre));
        freport.form = Some(lambda.iter().map(|c| f.format(c)).collect());
        freport.symmetric = Some(structure.is_symmetric());
        freport.nakayama_order = nakayama.order;
        freport.twisted_centre_dim = Some(tz.dim());
        frobenius = Some(FrobeniusData { structure, nakayama, twisted_centre: tz, higman: tau, casimir: q });
    }

    let multiplicity = if bundle.modules.is_empty() && opts.vermas.is_none() {
        None
    } else {
        let chosen: Vec<&ModulePresentation<F>> = match &opts.vermas {
            Some(names) => names
                .iter()
                .map(|nm| bundle.module(nm).ok_or_else(|| Error::Input(format!("no module named `{nm}`"))))
                .collect::<Result<_>>()?,
            None => bundle.modules.iter().collect(),
        };
        let m = multiplicity_report(alg, &chosen, &idem, &cartan)?;
        checks.insert("bgg".into(), m.bgg_holds);
        checks.insert("multiplicityProportionality".into(), m.proportional_holds);
        checks.insert("rankEquivalence".into(), m.rank_equivalence_holds);
        Some(m)
    };

    let labels = idem.labels();
    let per_block = cartan
        .blocks
        .iter()
        .zip(&cartan.per_block)
        .zip(&cartan.ranks)
        .zip(&verdict.per_block)
        .map(|(((classes, sub), r), v)| BlockReport {
            classes: classes.iter().map(|&l| labels[l].clone()).collect(),
            cartan: to_usize(sub),
            q_rank: r.q_rank,
            p_rank: r.p_rank,
            verdict: *v,
        })
        .collect();
    let mut report = AnalysisReport {
        field: f.spec().to_string(),
        dim: n,
        labels: alg.labels().to_vec(),
        radical_dim: rad.dim(),
        nilpotency_index: rad.nilpotency_index,
        centre_dim: centre.dim(),
        commutator_dim: alg.commutator_space().dim(),
        socle_dim: soc.dim(),
        blocks: idem.central.len(),
        class_labels: labels,
        class_dims: idem.class_dims.clone(),
        cartan: to_usize(&cartan.matrix),
        per_block,
        frobenius: freport,
        higman_image_dim: higman_dim,
        casimir_image_dim: casimir_dim,
        casimir_is_zero: casimir_zero,
        tau_image_central: tau_central,
        identity_checks: checks,
        consequence_checks: consequences,
        multiplicity,
        verdict,
        expected: BTreeMap::new(),
    };
    report.expected = compare_expected(&report, &bundle.expected);
    Ok(Analysis { radical: rad, idempotents: idem, cartan, centre, socle: soc, frobenius, report })
}

/// `true` for each expected key whose value the report reproduces exactly.
pub fn compare_expected(report: &AnalysisReport, expected: &BTreeMap<String, Expected>) -> BTreeMap<String, bool> {
    expected.iter().map(|(k, e)| (k.clone(), report.lookup(k).as_ref() == Some(&e.value))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;
    use crate::catalog::{build_named_group, build_smash};

    #[test]
    fn smash_report_reproduces_expected_values() {
        let r = analyze(&build_smash(Rationals, 2).unwrap(), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.higman_image_dim, Some(1));
        assert_eq!(r.casimir_is_zero, Some(true));
        assert_eq!(r.tau_image_central, Some(false));
        assert!(r.failed_checks().is_empty(), "{:?}", r.failed_checks());
        assert!(r.failed_expectations().is_empty(), "{:?}", r.failed_expectations());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn report_json_is_sorted_and_stable() {
        let b = build_named_group(Rationals, "group-c2").unwrap();
        let a = analyze(&b, &AnalyzeOptions::default()).unwrap().to_json();
        assert_eq!(a, analyze(&b, &AnalyzeOptions::default()).unwrap().to_json());
        let keys: Vec<&str> = a.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn searched_form_is_recorded() {
        let mut b = build_named_group(Rationals, "group-c2").unwrap();
        b.frobenius_form = None;
        let r = analyze(&b, &AnalyzeOptions { seed: 7, ..Default::default() }).unwrap();
        assert!(r.frobenius.source.starts_with("searched, seed = 7"));
        assert_eq!(r.higman_image_dim, Some(2));
    }

    #[test]
    fn cyclic_three_is_not_split() {
        let b = build_named_group(Rationals, "group-c3").unwrap();
        let err = analyze(&b, &AnalyzeOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NotSplit(_)), "{err}");
        assert_eq!(err.exit_code(), 3);
    }
}
