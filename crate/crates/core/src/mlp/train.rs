use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{EncodedDataset, Gradients, MlpError, MlpNetwork, Partition, RNG_ALGORITHM};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub hidden_units: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    pub seed: u64,
    /// Initial parameters are uniform in `[-init_scale, init_scale]`.
    pub init_scale: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self { hidden_units: 5, epochs: 1000, learning_rate: 0.1, seed: 0, init_scale: 0.5 }
    }
}

impl TrainConfig {
    fn validate(&self) -> Result<(), MlpError> {
        if self.hidden_units == 0 {
            return Err(MlpError::InvalidConfig("hidden units must be positive".into()));
        }
        if !(self.learning_rate > 0.0 && self.learning_rate.is_finite()) {
            return Err(MlpError::InvalidConfig(format!("learning rate {} must be positive", self.learning_rate)));
        }
        if !(self.init_scale >= 0.0 && self.init_scale.is_finite()) {
            return Err(MlpError::InvalidConfig(format!("init scale {} must be non-negative", self.init_scale)));
        }
        Ok(())
    }

    /// The seeded initial network for a `input_dim`-wide dataset.
    pub fn initial_network(&self, input_dim: usize) -> MlpNetwork {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        // stream 0 is the partition shuffle
        rng.set_stream(1);
        MlpNetwork::init_uniform(input_dim, self.hidden_units, self.init_scale, &mut rng)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainReport {
    pub train_sse: f64,
    pub test_sse: f64,
    /// `None` when the partition is empty or its targets are constant.
    pub train_relative_error: Option<f64>,
    pub test_relative_error: Option<f64>,
    pub n_train: usize,
    pub n_test: usize,
    pub epochs: usize,
    pub seed: u64,
    pub rng: String,
    pub config: TrainConfig,
}

/// Full-batch gradient descent on the training partition.
///
/// Each epoch takes one step along the gradient of `SSE / (2·n_train)`, which
/// has the same minimizers as the training SSE and keeps the step size
/// independent of the partition size.
pub fn train(dataset: &EncodedDataset, config: &TrainConfig) -> Result<(MlpNetwork, TrainReport), MlpError> {
    config.validate()?;
    let train_rows = dataset.rows_in(Partition::Train)?;
    if train_rows.is_empty() {
        return Err(MlpError::EmptyPartition(Partition::Train));
    }
    let n_test = dataset.len() - train_rows.len();
    let scale = 1.0 / train_rows.len() as f64;
    let mut net = config.initial_network(dataset.input_width());

    for epoch in 0..config.epochs {
        let mut grad = Gradients::zeros(net.input_dim(), net.hidden_units());
        let mut sse = 0.0;
        for &i in &train_rows {
            let (out, g) = net.backward(dataset.input(i))?;
            let residual = out - dataset.targets()[i];
            sse += residual * residual;
            grad.add_scaled(&g, residual * scale);
        }
        if !sse.is_finite() {
            return Err(MlpError::NonFiniteLoss { epoch });
        }
        net.step(&grad, config.learning_rate);
    }

    let train_sse = sum_squared_error(&net, dataset, Partition::Train)?;
    let test_sse = if n_test > 0 { sum_squared_error(&net, dataset, Partition::Test)? } else { 0.0 };
    if !train_sse.is_finite() || !test_sse.is_finite() || !net.parameters().iter().all(|p| p.is_finite()) {
        return Err(MlpError::NonFiniteLoss { epoch: config.epochs });
    }
    let report = TrainReport {
        train_sse,
        test_sse,
        train_relative_error: relative_error(&net, dataset, Partition::Train).ok(),
        test_relative_error: relative_error(&net, dataset, Partition::Test).ok(),
        n_train: train_rows.len(),
        n_test,
        epochs: config.epochs,
        seed: config.seed,
        rng: RNG_ALGORITHM.to_string(),
        config: config.clone(),
    };
    Ok((net, report))
}

/// `Σ (y − ŷ)²` over one partition.
pub fn sum_squared_error(net: &MlpNetwork, dataset: &EncodedDataset, part: Partition) -> Result<f64, MlpError> {
    let rows = dataset.rows_in(part)?;
    rows.iter().try_fold(0.0, |acc, &i| {
        let r = dataset.targets()[i] - net.forward(dataset.input(i))?;
        Ok(acc + r * r)
    })
}

/// SSE over the partition divided by the partition's total sum of squares
/// about its own mean.
pub fn relative_error(net: &MlpNetwork, dataset: &EncodedDataset, part: Partition) -> Result<f64, MlpError> {
    let rows = dataset.rows_in(part)?;
    if rows.is_empty() {
        return Err(MlpError::EmptyPartition(part));
    }
    let targets = dataset.targets();
    let mean = rows.iter().map(|&i| targets[i]).sum::<f64>() / rows.len() as f64;
    let total: f64 = rows.iter().map(|&i| (targets[i] - mean).powi(2)).sum();
    if !(total > 0.0) {
        return Err(MlpError::ZeroVariance { field: format!("{part} targets") });
    }
    Ok(sum_squared_error(net, dataset, part)? / total)
}
