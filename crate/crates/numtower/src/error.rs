use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is reducible over the tower")]
    ReduciblePolynomial,
    #[error("region does not isolate exactly one root")]
    AmbiguousRegion,
    #[error("tower degree {needed} exceeds the cap {cap}")]
    DegreeCapExceeded { cap: usize, needed: usize },
    #[error("element is not real")]
    NotReal,
    #[error("zero input")]
    ZeroInput,
    #[error("elements belong to incompatible towers")]
    TowerMismatch,
    #[error("malformed tower element JSON: {0}")]
    Json(String),
}
