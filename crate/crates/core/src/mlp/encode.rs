use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{MlpError, PredictorBlock, PredictorSchema, RawRecord};
use crate::decision::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Partition {
    Train,
    Test,
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Partition::Train => "train",
            Partition::Test => "test",
        })
    }
}

/// Observed range of a covariate, mapped onto `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CovariateRange {
    pub name: String,
    pub min: f64,
    pub max: f64,
}

impl CovariateRange {
    pub fn rescale(&self, x: f64) -> f64 {
        2.0 * (x - self.min) / (self.max - self.min) - 1.0
    }

    pub fn inverse(&self, u: f64) -> f64 {
        (u + 1.0) / 2.0 * (self.max - self.min) + self.min
    }
}

/// Target standardization `(y − mean) / sd`, with the sample (n − 1) standard deviation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TargetScale {
    pub name: String,
    pub mean: f64,
    pub sd: f64,
}

impl TargetScale {
    pub fn standardize(&self, y: f64) -> f64 {
        (y - self.mean) / self.sd
    }

    pub fn destandardize(&self, z: f64) -> f64 {
        z * self.sd + self.mean
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RescaleParams {
    pub covariates: Vec<CovariateRange>,
    pub target: TargetScale,
}

/// Network-ready dataset: one-hot factors, rescaled covariates, standardized target.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedDataset {
    inputs: Matrix,
    targets: Vec<f64>,
    predictors: Vec<PredictorBlock>,
    partition: Option<Vec<Partition>>,
    rescale: Option<RescaleParams>,
    schema_hash: Option<String>,
}

impl EncodedDataset {
    /// Wraps already-encoded inputs. `predictors` must tile `0..inputs.cols()`.
    pub fn from_parts(inputs: Matrix, targets: Vec<f64>, predictors: Vec<PredictorBlock>) -> Result<Self, MlpError> {
        if inputs.rows() != targets.len() {
            return Err(MlpError::DimensionMismatch { expected: inputs.rows(), found: targets.len() });
        }
        let mut next = 0;
        for block in &predictors {
            if block.columns.start != next || block.columns.is_empty() {
                return Err(MlpError::InvalidSchema(format!("predictor {} has non-contiguous columns", block.name)));
            }
            next = block.columns.end;
        }
        if next != inputs.cols() {
            return Err(MlpError::DimensionMismatch { expected: inputs.cols(), found: next });
        }
        Ok(Self { inputs, targets, predictors, partition: None, rescale: None, schema_hash: None })
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn input_width(&self) -> usize {
        self.inputs.cols()
    }

    pub fn inputs(&self) -> &Matrix {
        &self.inputs
    }

    pub fn input(&self, row: usize) -> &[f64] {
        self.inputs.row(row)
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    pub fn predictors(&self) -> &[PredictorBlock] {
        &self.predictors
    }

    pub fn partition_labels(&self) -> Option<&[Partition]> {
        self.partition.as_deref()
    }

    pub fn rescale(&self) -> Option<&RescaleParams> {
        self.rescale.as_ref()
    }

    pub fn schema_hash(&self) -> Option<&str> {
        self.schema_hash.as_deref()
    }

    /// Row indices in `part`, in dataset order.
    pub fn rows_in(&self, part: Partition) -> Result<Vec<usize>, MlpError> {
        let labels = self.partition.as_ref().ok_or(MlpError::NotPartitioned)?;
        Ok(labels.iter().enumerate().filter(|(_, &l)| l == part).map(|(i, _)| i).collect())
    }

    /// Assigns every row to `part`, e.g. to fit on the whole dataset.
    pub fn with_uniform_partition(mut self, part: Partition) -> Self {
        self.partition = Some(vec![part; self.len()]);
        self
    }
}

/// Encodes raw records under `schema`.
///
/// Covariates map linearly onto `[-1, 1]` using the observed min and max;
/// the target is standardized with the sample mean and standard deviation.
pub fn encode(records: &[RawRecord], schema: &PredictorSchema) -> Result<EncodedDataset, MlpError> {
    schema.validate()?;
    if records.len() < 2 {
        return Err(MlpError::EmptyDataset);
    }
    let n = records.len();
    let number = |row: usize, rec: &RawRecord, name: &str| -> Result<f64, MlpError> {
        rec.numbers
            .get(name)
            .copied()
            .filter(|x| x.is_finite())
            .ok_or_else(|| MlpError::MissingField { row, field: name.to_string() })
    };

    let mut covariates = Vec::with_capacity(schema.covariates.len());
    for cov in &schema.covariates {
        let column = records.iter().enumerate().map(|(i, r)| number(i, r, &cov.name)).collect::<Result<Vec<_>, _>>()?;
        let min = column.iter().copied().fold(f64::INFINITY, f64::min);
        let max = column.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if !(max > min) || !(max - min).is_finite() {
            return Err(MlpError::ZeroVariance { field: cov.name.clone() });
        }
        covariates.push((CovariateRange { name: cov.name.clone(), min, max }, column));
    }

    let raw_targets =
        records.iter().enumerate().map(|(i, r)| number(i, r, &schema.target.name)).collect::<Result<Vec<_>, _>>()?;
    let mean = raw_targets.iter().sum::<f64>() / n as f64;
    let var = raw_targets.iter().map(|y| (y - mean) * (y - mean)).sum::<f64>() / (n - 1) as f64;
    let sd = var.sqrt();
    if !(sd > 0.0) || !sd.is_finite() {
        return Err(MlpError::ZeroVariance { field: schema.target.name.clone() });
    }
    let target = TargetScale { name: schema.target.name.clone(), mean, sd };

    let width = schema.input_width();
    let mut inputs = Matrix::zeros(n, width);
    for (i, rec) in records.iter().enumerate() {
        let row = inputs.row_mut(i);
        let mut col = 0;
        for factor in &schema.factors {
            let value = rec
                .factors
                .get(&factor.name)
                .ok_or_else(|| MlpError::MissingField { row: i, field: factor.name.clone() })?;
            let level = factor.levels.iter().position(|l| l == value.trim()).ok_or_else(|| MlpError::UnknownLevel {
                row: i,
                factor: factor.name.clone(),
                value: value.clone(),
            })?;
            row[col + level] = 1.0;
            col += factor.levels.len();
        }
        for (range, column) in &covariates {
            row[col] = range.rescale(column[i]);
            col += 1;
        }
    }

    let targets = raw_targets.iter().map(|&y| target.standardize(y)).collect();
    Ok(EncodedDataset {
        inputs,
        targets,
        predictors: schema.predictors(),
        partition: None,
        rescale: Some(RescaleParams { covariates: covariates.into_iter().map(|(r, _)| r).collect(), target }),
        schema_hash: Some(schema.hash()),
    })
}

/// Number of training rows for `n` rows at `train_fraction`: `⌈n·f⌉`, kept
/// within `1..=n−1` so neither side is empty.
pub(crate) fn train_count(n: usize, train_fraction: f64) -> usize {
    // the epsilon absorbs representation error such as 200 × 0.71 = 142.00000000000003
    let k = (n as f64 * train_fraction - 1e-9).ceil() as usize;
    k.clamp(1, n - 1)
}

/// Labels rows Train/Test with a seeded uniform shuffle.
pub fn partition(mut dataset: EncodedDataset, train_fraction: f64, seed: u64) -> Result<EncodedDataset, MlpError> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(MlpError::InvalidConfig(format!("train fraction {train_fraction} not in (0, 1)")));
    }
    let n = dataset.len();
    if n < 2 {
        return Err(MlpError::EmptyDataset);
    }
    let k = train_count(n, train_fraction);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut labels = vec![Partition::Test; n];
    for &i in &order[..k] {
        labels[i] = Partition::Train;
    }
    dataset.partition = Some(labels);
    Ok(dataset)
}
