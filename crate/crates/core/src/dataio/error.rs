use thiserror::Error;

use crate::decision::DecisionError;
use crate::mlp::MlpError;

#[derive(Debug, Error)]
pub enum DataError {
    /// `row` and `col` are 1-based; row 1 is the header line.
    #[error("{file}:{row}:{col}: {message}")]
    Parse { file: String, row: usize, col: usize, message: String },

    #[error("{file}: {message}")]
    Io { file: String, message: String },

    #[error("id mismatch: {0}")]
    IdMismatch(String),

    #[error("{file}:{row}:{col}: schema violation: {message}")]
    SchemaViolation { file: String, row: usize, col: usize, message: String },

    #[error("dataset has no rows")]
    EmptyDataset,

    #[error(transparent)]
    Decision(#[from] DecisionError),

    #[error(transparent)]
    Mlp(#[from] MlpError),
}

impl DataError {
    pub(crate) fn parse(file: &str, row: usize, col: usize, message: impl Into<String>) -> Self {
        DataError::Parse { file: file.to_string(), row, col, message: message.into() }
    }

    pub(crate) fn io(file: &str, err: impl std::fmt::Display) -> Self {
        DataError::Io { file: file.to_string(), message: err.to_string() }
    }
}
