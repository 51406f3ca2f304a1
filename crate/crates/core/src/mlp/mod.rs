//! Criterion weights from a one-hidden-layer perceptron.
//!
//! A `d → h (tanh) → 1 (identity)` network is trained by full-batch gradient
//! descent on a factor/covariate dataset. Each predictor's importance is the
//! mean absolute gradient of the output with respect to its input columns
//! (a factor's one-hot columns are summed), normalized to sum to 1.

mod encode;
mod error;
mod importance;
mod network;
mod persist;
mod schema;
pub mod synthetic;
mod train;

pub use encode::{encode, partition, CovariateRange, EncodedDataset, Partition, RescaleParams, TargetScale};
pub use error::MlpError;
pub use importance::{importance, importances_to_weights, CriterionWeight, ImportanceReport, PredictorImportance};
pub use network::{forward, Gradients, MlpNetwork};
pub use persist::{NetworkDocument, NETWORK_FORMAT_VERSION};
pub use schema::{CovariateSpec, FactorSpec, PredictorBlock, PredictorKind, PredictorSchema, RawRecord, TargetSpec};
pub use train::{relative_error, sum_squared_error, train, TrainConfig, TrainReport};

/// Generator behind every seeded draw (partition shuffle, weight init, synthetic data).
pub const RNG_ALGORITHM: &str = "ChaCha8Rng::seed_from_u64 (rand_chacha 0.3)";
