use std::collections::{BTreeMap, HashSet};
use std::ops::Range;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::MlpError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub name: String,
    pub levels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovariateSpec {
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetSpec {
    pub name: String,
}

/// Declares which dataset columns are categorical factors, numeric covariates
/// and the numeric target.
///
/// Input layout: each factor expands to one column per level (binary factors
/// get two), in declaration order, followed by one column per covariate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictorSchema {
    pub factors: Vec<FactorSpec>,
    pub covariates: Vec<CovariateSpec>,
    pub target: TargetSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PredictorKind {
    Factor,
    Covariate,
}

/// A predictor and the input columns it occupies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictorBlock {
    pub name: String,
    pub kind: PredictorKind,
    pub columns: Range<usize>,
}

impl PredictorSchema {
    pub fn validate(&self) -> Result<(), MlpError> {
        let mut names = HashSet::new();
        let all = self
            .factors
            .iter()
            .map(|f| &f.name)
            .chain(self.covariates.iter().map(|c| &c.name))
            .chain(std::iter::once(&self.target.name));
        for name in all {
            if name.trim().is_empty() {
                return Err(MlpError::InvalidSchema("empty variable name".into()));
            }
            if !names.insert(name.as_str()) {
                return Err(MlpError::InvalidSchema(format!("variable {name:?} declared twice")));
            }
        }
        for f in &self.factors {
            if f.levels.len() < 2 {
                return Err(MlpError::InvalidSchema(format!(
                    "factor {:?} has {} level(s), at least 2 required",
                    f.name,
                    f.levels.len()
                )));
            }
            let distinct: HashSet<_> = f.levels.iter().collect();
            if distinct.len() != f.levels.len() {
                return Err(MlpError::InvalidSchema(format!("factor {:?} repeats a level", f.name)));
            }
        }
        if self.factors.is_empty() && self.covariates.is_empty() {
            return Err(MlpError::InvalidSchema("no predictors declared".into()));
        }
        Ok(())
    }

    /// Number of network input units.
    pub fn input_width(&self) -> usize {
        self.factors.iter().map(|f| f.levels.len()).sum::<usize>() + self.covariates.len()
    }

    pub fn predictors(&self) -> Vec<PredictorBlock> {
        let mut start = 0;
        let mut blocks = Vec::with_capacity(self.factors.len() + self.covariates.len());
        for f in &self.factors {
            blocks.push(PredictorBlock {
                name: f.name.clone(),
                kind: PredictorKind::Factor,
                columns: start..start + f.levels.len(),
            });
            start += f.levels.len();
        }
        for c in &self.covariates {
            blocks.push(PredictorBlock { name: c.name.clone(), kind: PredictorKind::Covariate, columns: start..start + 1 });
            start += 1;
        }
        blocks
    }

    /// Hex SHA-256 of the schema's compact JSON form.
    pub fn hash(&self) -> String {
        let json = serde_json::to_vec(self).expect("schema serializes");
        Sha256::digest(&json).iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// One dataset row: factor values by name and numeric values (covariates and
/// target) by name.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawRecord {
    pub factors: BTreeMap<String, String>,
    pub numbers: BTreeMap<String, f64>,
}
