//! Constructors for the curated examples, plus the building blocks behind them.
//!
//! A [`Bundle`] packages an algebra with the optional data an analysis can
//! use: a Frobenius form, a list of primitive idempotents, named modules, and
//! expected values keyed by report field.

mod curated;
mod families;
mod groups;
pub mod random;
mod straighten;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use curated::{
    baby_verma_modules, build_example, build_group_algebra, build_named_group, build_rrca_c2, build_smash, build_usl2,
    rrca_algebra, s3_young_idempotents, usl2_algebra, ExampleParams, EXAMPLE_NAMES,
};
pub use families::{
    incidence_algebra, matrix_algebra, nakayama_algebra, nakayama_form, smash_algebra, smash_form, trace_form,
    truncated_polynomial, twisted_group_ring, upper_triangular_algebra,
};
pub use groups::{
    cyclic_group_table, dihedral_group_table, group_algebra, permutation_group_table, quaternion_group_table,
    symmetric_group_s3_table, GroupTable,
};
pub use straighten::{Straightener, WordSum};

use crate::algebra::{Algebra, ModulePresentation};
use crate::arith::{Field, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::frobenius::dual_bases;
use crate::structure::check_complete;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the published source.
    Published,
    /// Computed independently and cross-checked.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: serde_json::Value,
    pub provenance: Provenance,
}

impl Expected {
    pub fn new(value: impl Into<serde_json::Value>, provenance: Provenance) -> Self {
        Self { value: value.into(), provenance }
    }
}

/// An algebra with everything an analysis might want alongside it.
#[derive(Clone, Debug, PartialEq)]
pub struct Bundle<F: Field> {
    pub algebra: Algebra<F>,
    pub frobenius_form: Option<Vec<F::Elem>>,
    pub idempotents: Option<Vec<Vec<F::Elem>>>,
    /// Sorted by name, the order they come back from a file in.
    pub modules: Vec<ModulePresentation<F>>,
    /// Keyed by report field; dotted keys reach into nested objects.
    pub expected: BTreeMap<String, Expected>,
}

impl<F: Field> Bundle<F> {
    pub fn new(algebra: Algebra<F>) -> Self {
        Self { algebra, frobenius_form: None, idempotents: None, modules: Vec::new(), expected: BTreeMap::new() }
    }

    pub fn expect(&mut self, key: &str, value: impl Into<serde_json::Value>, provenance: Provenance) -> &mut Self {
        self.expected.insert(key.to_string(), Expected::new(value, provenance));
        self
    }

    pub fn module(&self, name: &str) -> Option<&ModulePresentation<F>> {
        self.modules.iter().find(|m| m.name == name)
    }

    /// Validates the algebra and every optional component.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        alg.validate()?;
        if let Some(lambda) = &self.frobenius_form {
            if lambda.len() != alg.dim() {
                return Err(Error::Input(format!(
                    "Frobenius form has length {}, expected {}",
                    lambda.len(),
                    alg.dim()
                )));
            }
            dual_bases(alg, lambda)?;
        }
        if let Some(idems) = &self.idempotents {
            if idems.iter().any(|e| e.len() != alg.dim()) {
                return Err(Error::Input("supplied idempotent has the wrong length".into()));
            }
            check_complete(alg, idems)?;
        }
        for (i, m) in self.modules.iter().enumerate() {
            if self.modules[..i].iter().any(|o| o.name == m.name) {
                return Err(Error::Input(format!("module name `{}` used twice", m.name)));
            }
            m.validate(alg)?;
        }
        Ok(())
    }
}

/// A bundle over either kind of ground field.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyBundle {
    Q(Bundle<Rationals>),
    Fp(Bundle<PrimeField>),
}

impl AnyBundle {
    pub fn validate(&self) -> Result<()> {
        match self {
            AnyBundle::Q(b) => b.validate(),
            AnyBundle::Fp(b) => b.validate(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyBundle::Q(b) => b.algebra.dim(),
            AnyBundle::Fp(b) => b.algebra.dim(),
        }
    }

    pub fn expected(&self) -> &BTreeMap<String, Expected> {
        match self {
            AnyBundle::Q(b) => &b.expected,
            AnyBundle::Fp(b) => &b.expected,
        }
    }
}

impl From<Bundle<Rationals>> for AnyBundle {
    fn from(b: Bundle<Rationals>) -> Self {
        AnyBundle::Q(b)
    }
}

impl From<Bundle<PrimeField>> for AnyBundle {
    fn from(b: Bundle<PrimeField>) -> Self {
        AnyBundle::Fp(b)
    }
}
