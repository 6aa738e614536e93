//! Exact structure theory for finite-dimensional associative algebras.
//!
//! An [`Algebra`] is given by structure constants over [`Rationals`] or a
//! [`PrimeField`]. From it the crate computes the radical, primitive and
//! central primitive idempotents, the Cartan matrix and its block ranks,
//! Frobenius forms with their Nakayama automorphism, and the Higman and
//! Casimir maps, and checks how these fit together (see [`report::analyze`]).
//!
//! ```
//! use rankone::catalog::build_smash;
//! use rankone::report::{analyze, AnalyzeOptions};
//! use rankone::Rationals;
//!
//! let bundle = build_smash(Rationals, 2).unwrap();
//! let report = analyze(&bundle, &AnalyzeOptions::default()).unwrap();
//! assert_eq!(report.higman_image_dim, Some(1));
//! assert_eq!(report.casimir_is_zero, Some(true));
//! ```

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod algebra;
pub mod arith;
pub mod catalog;
pub mod error;
pub mod format;
pub mod frobenius;
pub mod report;
pub mod structure;

pub use algebra::{Algebra, ModulePresentation, Side};
pub use arith::{Field, FieldSpec, Matrix, PrimeField, Rationals, Subspace, UniPoly};
pub use error::{Error, Result, Violation};
