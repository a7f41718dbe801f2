use numtower::TowerError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("component {0} is not in the support")]
    ComponentNotInSupport(String),
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(usize),
    #[error("invalid resonance witness: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
