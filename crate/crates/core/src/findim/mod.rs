//! Exact finite-dimensional workbench: structure-constant algebras,
//! bimodules, cocycle extensions, and every operator identity together with
//! the algebraic structure it induces.
//!
//! All checks are exhaustive over basis tuples (cost `dⁿ` per `n`-linear
//! relation) and return full witnesses rather than booleans. Degenerate
//! dimensions (`d = 0` or `m = 0`) are legal everywhere and give vacuous
//! passes.

mod constructions;
pub mod linalg;
mod operators;
mod types;

use thiserror::Error;

use crate::terms::{OpSymbol, TermError};

pub use constructions::{
    check_in_category, check_relations, check_split_relations, cocycle_extension, double,
    is_2cocycle, is_bimodule, is_bimodule_algebra, semidirect_sum, trivial_extension,
};
pub use linalg::{Mat, StructureTensor};
pub use operators::{
    check_nijenhuis, check_rb, check_relative_rb, check_reynolds, check_twisted_rb,
    general_ns, graph_subalgebra, lift_operator, nijenhuis_deformed, nijenhuis_ns,
    nijrb_bimodule, ns_to_twisted_rb, rb_ns, rb_tridendriform, trb_ns, NsFactorization,
};
pub use types::{
    unit, Bimodule, CheckReport, Cocycle, FinAlgebra, LinOperator, OperatorKind, Violation,
};

/// Errors raised by the finite-dimensional workbench.
#[derive(Debug, Error)]
pub enum FindimError {
    #[error("algebra has no product `{0}`")]
    MissingProduct(OpSymbol),
    #[error("bimodule has no module product")]
    MissingModuleProduct,
    #[error("operator matrix is {rows}×{cols}, not an endomorphism of the algebra")]
    NotEndomorphism { rows: usize, cols: usize },
    #[error("operator fails the Nijenhuis identity")]
    NotNijenhuis,
    #[error("operator fails the relative Rota-Baxter identity")]
    NotRelativeRotaBaxter,
    #[error("operator fails the twisted Rota-Baxter identity")]
    NotTwistedRotaBaxter,
    #[error("map is not a 2-cocycle")]
    InvalidCocycle,
    #[error("products do not form an NS-algebra for the category")]
    NotNsAlgebra,
    #[error("graph is not closed under the ambient product at basis pair ({left}, {right})")]
    GraphNotClosed { left: usize, right: usize },
    #[error("hypothesis failed: {hypothesis}")]
    HypothesisFailed { hypothesis: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Term(#[from] TermError),
}
