use thiserror::Error;

use super::Partition;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MlpError {
    #[error("row {row}: value {value:?} is not a declared level of factor {factor}")]
    UnknownLevel { row: usize, factor: String, value: String },

    #[error("row {row}: missing field {field}")]
    MissingField { row: usize, field: String },

    #[error("{field} has zero variance")]
    ZeroVariance { field: String },

    #[error("dataset is empty or too small")]
    EmptyDataset,

    #[error("{0} partition is empty")]
    EmptyPartition(Partition),

    #[error("dataset has not been partitioned")]
    NotPartitioned,

    #[error("invalid schema: {0}")]
    InvalidSchema(String),

    #[error("invalid training configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("training diverged: loss is not finite at epoch {epoch}")]
    NonFiniteLoss { epoch: usize },

    #[error("all input sensitivities are zero")]
    DegenerateImportance,

    #[error("unmapped criterion {0}")]
    UnmappedCriterion(String),

    #[error("mapping names unknown predictor {0}")]
    UnknownPredictor(String),

    #[error("network document: {0}")]
    Document(String),
}
