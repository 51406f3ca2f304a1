use serde::{Deserialize, Serialize};

use super::{MlpError, MlpNetwork, RescaleParams, TrainConfig, RNG_ALGORITHM};

pub const NETWORK_FORMAT_VERSION: u32 = 1;

/// JSON form of a trained network together with what is needed to apply it
/// to raw data again.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkDocument {
    pub format_version: u32,
    pub schema_hash: Option<String>,
    pub input_dim: usize,
    pub hidden_units: usize,
    /// Row-major `input_dim × hidden_units`.
    pub hidden_weights: Vec<f64>,
    pub hidden_bias: Vec<f64>,
    pub output_weights: Vec<f64>,
    pub output_bias: f64,
    pub rescale: Option<RescaleParams>,
    pub seed: u64,
    pub rng: String,
    pub config: TrainConfig,
}

impl NetworkDocument {
    pub fn new(net: &MlpNetwork, schema_hash: Option<String>, rescale: Option<RescaleParams>, config: &TrainConfig) -> Self {
        Self {
            format_version: NETWORK_FORMAT_VERSION,
            schema_hash,
            input_dim: net.input_dim(),
            hidden_units: net.hidden_units(),
            hidden_weights: net.hidden_weights().to_vec(),
            hidden_bias: net.hidden_bias().to_vec(),
            output_weights: net.output_weights().to_vec(),
            output_bias: net.output_bias(),
            rescale,
            seed: config.seed,
            rng: RNG_ALGORITHM.to_string(),
            config: config.clone(),
        }
    }

    pub fn network(&self) -> Result<MlpNetwork, MlpError> {
        if self.format_version != NETWORK_FORMAT_VERSION {
            return Err(MlpError::Document(format!("unsupported format version {}", self.format_version)));
        }
        MlpNetwork::from_parts(
            self.input_dim,
            self.hidden_units,
            self.hidden_weights.clone(),
            self.hidden_bias.clone(),
            self.output_weights.clone(),
            self.output_bias,
        )
    }

    /// Fails unless the document was produced under the schema with `hash`.
    pub fn check_schema(&self, hash: &str) -> Result<(), MlpError> {
        match &self.schema_hash {
            Some(h) if h == hash => Ok(()),
            Some(h) => Err(MlpError::Document(format!("schema hash {h} does not match {hash}"))),
            None => Err(MlpError::Document("document carries no schema hash".into())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, MlpError> {
        serde_json::from_str(s).map_err(|e| MlpError::Document(e.to_string()))
    }
}
