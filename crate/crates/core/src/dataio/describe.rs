use serde::{Deserialize, Serialize};

use super::DataError;
use crate::mlp::{PredictorSchema, RawRecord};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariableStats {
    pub name: String,
    pub n: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// Sample standard deviation (divisor n − 1); 0 when `n == 1`.
    pub sd: f64,
    /// Set when `n == 1` and the standard deviation is undefined.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveStats {
    pub variables: Vec<VariableStats>,
}

impl VariableStats {
    /// Single pass (Welford) over `values`.
    pub fn from_values(name: &str, values: impl IntoIterator<Item = f64>) -> Option<Self> {
        let (mut n, mut mean, mut m2) = (0usize, 0.0f64, 0.0f64);
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        for x in values {
            n += 1;
            let delta = x - mean;
            mean += delta / n as f64;
            m2 += delta * (x - mean);
            min = min.min(x);
            max = max.max(x);
        }
        if n == 0 {
            return None;
        }
        let sd = if n > 1 { (m2 / (n - 1) as f64).sqrt() } else { 0.0 };
        Some(Self { name: name.to_string(), n, min, max, mean: mean.clamp(min, max), sd, degenerate: n == 1 })
    }
}

/// Statistics for each covariate and the target.
pub fn describe(records: &[RawRecord], schema: &PredictorSchema) -> Result<DescriptiveStats, DataError> {
    if records.is_empty() {
        return Err(DataError::EmptyDataset);
    }
    let names = schema.covariates.iter().map(|c| c.name.as_str()).chain(std::iter::once(schema.target.name.as_str()));
    let mut variables = Vec::new();
    for name in names {
        let values = records
            .iter()
            .enumerate()
            .map(|(row, r)| {
                r.numbers.get(name).copied().ok_or_else(|| crate::mlp::MlpError::MissingField { row, field: name.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        variables.push(VariableStats::from_values(name, values).expect("records is non-empty"));
    }
    Ok(DescriptiveStats { variables })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_computed() {
        let s = VariableStats::from_values("x", [1.0, 2.0, 3.0]).unwrap();
        assert_eq!((s.min, s.max, s.mean, s.sd, s.degenerate), (1.0, 3.0, 2.0, 1.0, false));
    }

    #[test]
    fn single_row_is_degenerate() {
        let s = VariableStats::from_values("x", [4.5]).unwrap();
        assert_eq!((s.sd, s.degenerate), (0.0, true));
    }

    #[test]
    fn constant_column() {
        let s = VariableStats::from_values("x", [5.0; 4]).unwrap();
        assert_eq!((s.sd, s.mean), (0.0, 5.0));
    }

    #[test]
    fn empty_dataset() {
        let schema = crate::mlp::synthetic::oiz_schema();
        assert!(matches!(describe(&[], &schema), Err(DataError::EmptyDataset)));
    }
}
