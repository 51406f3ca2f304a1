use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{EncodedDataset, MlpError, MlpNetwork, PredictorKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictorImportance {
    pub name: String,
    pub kind: PredictorKind,
    /// Share of the total sensitivity; all importances sum to 1.
    pub importance: f64,
    /// `importance / max importance`.
    pub normalized: f64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImportanceReport {
    pub predictors: Vec<PredictorImportance>,
}

impl ImportanceReport {
    /// Builds a report from importances that already sum to 1, e.g. a published table.
    pub fn from_importances(entries: Vec<(String, PredictorKind, f64)>) -> Result<Self, MlpError> {
        let total: f64 = entries.iter().map(|e| e.2).sum();
        if entries.iter().any(|e| !(e.2 >= 0.0)) || !(total > 0.0) {
            return Err(MlpError::DegenerateImportance);
        }
        Ok(Self::assemble(entries))
    }

    fn assemble(entries: Vec<(String, PredictorKind, f64)>) -> Self {
        let max = entries.iter().map(|e| e.2).fold(0.0, f64::max);
        let mut order: Vec<usize> = (0..entries.len()).collect();
        order.sort_by(|&a, &b| entries[b].2.total_cmp(&entries[a].2));
        let mut ranks = vec![0; entries.len()];
        for (pos, &i) in order.iter().enumerate() {
            ranks[i] = pos + 1;
        }
        let predictors = entries
            .into_iter()
            .zip(ranks)
            .map(|((name, kind, importance), rank)| PredictorImportance {
                name,
                kind,
                importance,
                normalized: importance / max,
                rank,
            })
            .collect();
        Self { predictors }
    }

    pub fn get(&self, name: &str) -> Option<&PredictorImportance> {
        self.predictors.iter().find(|p| p.name == name)
    }

    pub fn values(&self) -> Vec<f64> {
        self.predictors.iter().map(|p| p.importance).collect()
    }
}

/// Mean absolute input sensitivity per predictor, normalized to sum to 1.
///
/// For each row the gradient `∂output/∂input` is taken, the absolute values
/// over a predictor's input columns are summed, and the sums are averaged
/// over every row of the dataset.
pub fn importance(net: &MlpNetwork, dataset: &EncodedDataset) -> Result<ImportanceReport, MlpError> {
    if dataset.is_empty() {
        return Err(MlpError::EmptyDataset);
    }
    if net.input_dim() != dataset.input_width() {
        return Err(MlpError::DimensionMismatch { expected: dataset.input_width(), found: net.input_dim() });
    }
    let blocks = dataset.predictors();
    let mut raw = vec![0.0; blocks.len()];
    for i in 0..dataset.len() {
        let grad = net.input_gradient(dataset.input(i))?;
        for (acc, block) in raw.iter_mut().zip(blocks) {
            *acc += grad[block.columns.clone()].iter().map(|g| g.abs()).sum::<f64>();
        }
    }
    let n = dataset.len() as f64;
    raw.iter_mut().for_each(|r| *r /= n);

    let total: f64 = raw.iter().sum();
    if !(total > 0.0) || !total.is_finite() {
        return Err(MlpError::DegenerateImportance);
    }
    Ok(ImportanceReport::assemble(
        blocks.iter().zip(raw).map(|(b, r)| (b.name.clone(), b.kind, r / total)).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionWeight {
    pub criterion: String,
    pub weight: f64,
}

/// Turns predictor importances into criterion weights.
///
/// `mapping` pairs predictor names with criterion ids; several predictors may
/// feed one criterion (their importances add). Every id in `criteria` must
/// receive at least one predictor. Predictors left out of the mapping are
/// dropped and the remaining weights are rescaled to sum to 1.
pub fn importances_to_weights(
    report: &ImportanceReport,
    mapping: &[(String, String)],
    criteria: &[String],
) -> Result<Vec<CriterionWeight>, MlpError> {
    let mut totals: HashMap<&str, f64> = HashMap::new();
    for (predictor, criterion) in mapping {
        let p = report.get(predictor).ok_or_else(|| MlpError::UnknownPredictor(predictor.clone()))?;
        if !criteria.contains(criterion) {
            return Err(MlpError::UnmappedCriterion(format!("{criterion}: mapped to but not a criterion of the problem")));
        }
        *totals.entry(criterion.as_str()).or_insert(0.0) += p.importance;
    }
    let mut weights = Vec::with_capacity(criteria.len());
    for c in criteria {
        let w = *totals.get(c.as_str()).ok_or_else(|| MlpError::UnmappedCriterion(c.clone()))?;
        weights.push(CriterionWeight { criterion: c.clone(), weight: w });
    }
    let sum: f64 = weights.iter().map(|w| w.weight).sum();
    if !(sum > 0.0) {
        return Err(MlpError::DegenerateImportance);
    }
    if (sum - 1.0).abs() > 1e-12 {
        weights.iter_mut().for_each(|w| w.weight /= sum);
    }
    Ok(weights)
}
