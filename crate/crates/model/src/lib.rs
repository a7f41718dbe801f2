//! Divisorial models of resolved foliation germs.
//!
//! From a [`resolution::ResolutionTree`] this crate builds Camacho-Sad
//! indices along every component, the index matrix of the separatrices and
//! the divisorial model, computed both as the kernel of the index matrix
//! and by propagation over the dual graph. It also checks given divisors,
//! decides their dicriticality and tests stability under a blow-up.

mod cs;
mod linalg;
mod matrix;
mod model;
mod report;

pub use cs::{cs_along, cs_index_branch, cs_index_of_form, cs_index_simple, cs_residue, cs_sums};
pub use linalg::{det, nullspace, rank};
pub use matrix::{build_index_matrix, resultant_cross_check, IndexMatrix};
pub use model::{
    blowup_stability, compute_model, divisor_dicriticality, divisorial_model_kernel, divisorial_model_propagation,
    exceptional_coefficients, logarithmic_model_form, verify_model, DivisorialModel, ModelResult, StabilityCheck,
    VerifyReport,
};
pub use report::{annotated_dot, model_json, tree_json, verify_json};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ModelError {
    #[error("point {0} is not simple")]
    NotSimple(String),
    #[error("{0} does not pass through {1}")]
    NotIncident(String, String),
    #[error("unknown branch {0}")]
    UnknownBranch(String),
    #[error("index matrix has rank {got}, expected {expected}")]
    Rank { expected: usize, got: usize },
    #[error("the minor B0 is singular")]
    SingularMinor,
    #[error("model coefficient of {0} vanishes")]
    ZeroCoefficient(String),
    #[error("no edge of the dual graph reaches {0}")]
    Unreached(String),
    #[error("inconsistent propagation at {0}")]
    Inconsistent(String),
    #[error("blow-up law fails for {0}")]
    BlowupLaw(String),
    #[error("kernel and propagation models disagree")]
    Disagreement,
    #[error("equation-branch-mismatch: {0}")]
    EquationMismatch(String),
    #[error(transparent)]
    Resolve(#[from] resolution::ResolveError),
    #[error(transparent)]
    Divisor(#[from] divisor::DivisorError),
    #[error(transparent)]
    Blowup(#[from] blowup::BlowupError),
}
