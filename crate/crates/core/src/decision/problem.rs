use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{DecisionError, Matrix};

/// Allowed deviation of the weight sum from 1 under [`WeightPolicy::Strict`].
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Which end of a criterion's scale is preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    #[serde(rename = "max")]
    Maximize,
    #[serde(rename = "min")]
    Minimize,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Maximize => "max",
            Direction::Minimize => "min",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "max" | "maximize" => Ok(Direction::Maximize),
            "min" | "minimize" => Ok(Direction::Minimize),
            other => Err(format!("unknown direction {other:?}, expected max or min")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub id: String,
    pub name: String,
    pub direction: Direction,
    pub weight: f64,
}

impl CriterionSpec {
    pub fn new(id: impl Into<String>, name: impl Into<String>, direction: Direction, weight: f64) -> Self {
        Self { id: id.into(), name: name.into(), direction, weight }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub id: String,
    pub name: String,
}

impl Alternative {
    /// An alternative whose display name is its id.
    pub fn new(id: impl Into<String>) -> Self {
        let id = id.into();
        Self { name: id.clone(), id }
    }

    pub fn named(id: impl Into<String>, name: impl Into<String>) -> Self {
        Self { id: id.into(), name: name.into() }
    }
}

/// How `build` treats weights that do not sum to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightPolicy {
    /// Reject unless `|Σw − 1| ≤ WEIGHT_SUM_TOLERANCE`.
    #[default]
    Strict,
    /// Divide every weight by the sum.
    Normalize,
}

/// Fingerprint of the parts of a problem that determine its SPC and LC matrices
/// (criterion ids, directions, alternative ids and values). Weights are excluded,
/// so a reweighted copy of a problem keeps its id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ProblemId(pub u64);

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

impl From<ProblemId> for String {
    fn from(id: ProblemId) -> Self {
        id.to_string()
    }
}

impl TryFrom<String> for ProblemId {
    type Error = std::num::ParseIntError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        u64::from_str_radix(&s, 16).map(ProblemId)
    }
}

/// A validated criteria × alternatives decision matrix with criterion metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    criteria: Vec<CriterionSpec>,
    alternatives: Vec<Alternative>,
    values: Matrix,
    id: ProblemId,
}

impl DecisionProblem {
    /// Validates and assembles a problem. `values` has one row per criterion
    /// and one column per alternative.
    pub fn build(
        mut criteria: Vec<CriterionSpec>,
        alternatives: Vec<Alternative>,
        values: Matrix,
        policy: WeightPolicy,
    ) -> Result<Self, DecisionError> {
        if criteria.is_empty() || alternatives.is_empty() {
            return Err(DecisionError::Empty);
        }
        if values.shape() != (criteria.len(), alternatives.len()) {
            return Err(DecisionError::DimensionMismatch {
                expected: format!("{}x{}", criteria.len(), alternatives.len()),
                found: format!("{}x{}", values.rows(), values.cols()),
            });
        }
        check_unique("criterion", criteria.iter().map(|c| c.id.as_str()))?;
        check_unique("alternative", alternatives.iter().map(|a| a.id.as_str()))?;

        for (i, c) in criteria.iter().enumerate() {
            let row = values.row(i);
            if let Some(j) = row.iter().position(|x| !x.is_finite()) {
                return Err(DecisionError::NonFiniteValue {
                    criterion: c.id.clone(),
                    alternative: alternatives[j].id.clone(),
                });
            }
            let (lo, hi) = row.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
            if !(hi - lo).is_finite() {
                return Err(DecisionError::RowSpanOverflow { criterion: c.id.clone() });
            }
        }

        normalize_weights(&mut criteria, policy)?;
        let id = fingerprint(&criteria, &alternatives, &values);
        Ok(Self { criteria, alternatives, values, id })
    }

    /// Same problem with a new weight vector, validated under `policy`.
    pub fn with_weights(&self, weights: &[f64], policy: WeightPolicy) -> Result<Self, DecisionError> {
        if weights.len() != self.criteria.len() {
            return Err(DecisionError::DimensionMismatch {
                expected: format!("{} weights", self.criteria.len()),
                found: format!("{} weights", weights.len()),
            });
        }
        let mut criteria = self.criteria.clone();
        for (c, &w) in criteria.iter_mut().zip(weights) {
            c.weight = w;
        }
        normalize_weights(&mut criteria, policy)?;
        Ok(Self { criteria, ..self.clone() })
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alternatives
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    pub fn weights(&self) -> Vec<f64> {
        self.criteria.iter().map(|c| c.weight).collect()
    }

    pub fn id(&self) -> ProblemId {
        self.id
    }

    pub fn num_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn num_alternatives(&self) -> usize {
        self.alternatives.len()
    }
}

/// Free-function form of [`DecisionProblem::build`].
pub fn build_problem(
    criteria: Vec<CriterionSpec>,
    alternatives: Vec<Alternative>,
    values: Matrix,
    policy: WeightPolicy,
) -> Result<DecisionProblem, DecisionError> {
    DecisionProblem::build(criteria, alternatives, values, policy)
}

fn check_unique<'a>(kind: &'static str, ids: impl Iterator<Item = &'a str>) -> Result<(), DecisionError> {
    let mut seen = HashSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(DecisionError::DuplicateId { kind, id: id.to_string() });
        }
    }
    Ok(())
}

fn normalize_weights(criteria: &mut [CriterionSpec], policy: WeightPolicy) -> Result<(), DecisionError> {
    for c in criteria.iter() {
        if !(c.weight >= 0.0 && c.weight.is_finite()) {
            return Err(DecisionError::NegativeWeight { criterion: c.id.clone(), weight: c.weight });
        }
    }
    let sum: f64 = criteria.iter().map(|c| c.weight).sum();
    match policy {
        WeightPolicy::Strict => {
            if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
                return Err(DecisionError::WeightSumViolation { sum, tolerance: WEIGHT_SUM_TOLERANCE });
            }
        }
        WeightPolicy::Normalize => {
            if !(sum > 0.0) {
                return Err(DecisionError::WeightSumViolation { sum, tolerance: WEIGHT_SUM_TOLERANCE });
            }
            for c in criteria.iter_mut() {
                c.weight /= sum;
            }
        }
    }
    Ok(())
}

fn fingerprint(criteria: &[CriterionSpec], alternatives: &[Alternative], values: &Matrix) -> ProblemId {
    let mut h = Sha256::new();
    for c in criteria {
        h.update(c.id.as_bytes());
        h.update([0u8, c.direction as u8]);
    }
    h.update([0xff]);
    for a in alternatives {
        h.update(a.id.as_bytes());
        h.update([0u8]);
    }
    for x in values.as_slice() {
        h.update(x.to_bits().to_le_bytes());
    }
    let digest = h.finalize();
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);
    ProblemId(u64::from_le_bytes(head))
}
