use thiserror::Error;

use super::Stage;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecisionError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("non-finite value at criterion {criterion}, alternative {alternative}")]
    NonFiniteValue { criterion: String, alternative: String },

    #[error("criterion {criterion} has a negative or non-finite weight ({weight})")]
    NegativeWeight { criterion: String, weight: f64 },

    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },

    #[error("weights sum to {sum}, expected 1 within {tolerance}")]
    WeightSumViolation { sum: f64, tolerance: f64 },

    #[error("row span of criterion {criterion} overflows f64")]
    RowSpanOverflow { criterion: String },

    #[error("expected a {expected} stage matrix, got {found}")]
    StageMismatch { expected: Stage, found: Stage },

    #[error("stage matrix was produced from a different decision problem")]
    ProblemMismatch,

    #[error("invalid stage matrix: {0}")]
    InvalidStage(String),

    #[error("a problem needs at least one criterion and one alternative")]
    Empty,
}
