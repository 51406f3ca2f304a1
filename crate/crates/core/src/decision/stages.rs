use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DecisionError, DecisionProblem, Direction, Matrix, ProblemId};

/// Upper bound of the LC stage, `1 / ln 2`, reached exactly where the SPC deviation is 0.
pub const LC_MAX: f64 = std::f64::consts::LOG2_E;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    /// Starting-point criteria: deviation from the row's best value.
    #[serde(rename = "SPC")]
    Spc,
    /// Logarithmic conversion `1 / ln(p + 2)`.
    #[serde(rename = "LC")]
    Lc,
    /// Weighted logarithmic conversion.
    #[serde(rename = "WLC")]
    Wlc,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Spc => "SPC",
            Stage::Lc => "LC",
            Stage::Wlc => "WLC",
        })
    }
}

/// Output of one pipeline stage, tagged with the stage and the source problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageMatrix {
    stage: Stage,
    problem: ProblemId,
    data: Matrix,
}

impl StageMatrix {
    /// Reassembles a stage matrix (e.g. from a saved report), checking the
    /// stage's range invariant.
    pub fn from_parts(stage: Stage, problem: ProblemId, data: Matrix) -> Result<Self, DecisionError> {
        let bad = |msg: String| Err(DecisionError::InvalidStage(msg));
        for (i, row) in data.iter_rows().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let ok = match stage {
                    Stage::Spc | Stage::Wlc => x >= 0.0 && x.is_finite(),
                    Stage::Lc => x > 0.0 && x <= LC_MAX,
                };
                if !ok {
                    return bad(format!("{stage} entry ({i}, {j}) = {x} out of range"));
                }
            }
            if stage == Stage::Spc && !row.is_empty() && !row.contains(&0.0) {
                return bad(format!("SPC row {i} has no zero entry"));
            }
        }
        Ok(Self { stage, problem, data })
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn problem(&self) -> ProblemId {
        self.problem
    }

    pub fn data(&self) -> &Matrix {
        &self.data
    }

    pub fn into_data(self) -> Matrix {
        self.data
    }

    fn expect(&self, stage: Stage) -> Result<(), DecisionError> {
        if self.stage == stage {
            Ok(())
        } else {
            Err(DecisionError::StageMismatch { expected: stage, found: self.stage })
        }
    }
}

/// Deviation of each value from its criterion's best value.
///
/// For a maximized criterion `p = max_row − x`, for a minimized one
/// `p = x − min_row`. The extremum is taken across alternatives, within the
/// criterion's row, so every row has at least one zero.
pub fn compute_spc(problem: &DecisionProblem) -> StageMatrix {
    let values = problem.values();
    let mut out = Matrix::zeros(values.rows(), values.cols());
    for (i, criterion) in problem.criteria().iter().enumerate() {
        let row = values.row(i);
        let dst = out.row_mut(i);
        match criterion.direction {
            Direction::Maximize => {
                let best = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                for (d, &x) in dst.iter_mut().zip(row) {
                    *d = best - x;
                }
            }
            Direction::Minimize => {
                let best = row.iter().copied().fold(f64::INFINITY, f64::min);
                for (d, &x) in dst.iter_mut().zip(row) {
                    *d = x - best;
                }
            }
        }
    }
    StageMatrix { stage: Stage::Spc, problem: problem.id(), data: out }
}

/// `l = 1 / ln(p + 2)`, mapping deviations onto `(0, 1/ln 2]`.
pub fn compute_lc(spc: &StageMatrix) -> Result<StageMatrix, DecisionError> {
    spc.expect(Stage::Spc)?;
    let data = spc.data.map(|p| (p + 2.0).ln().recip());
    Ok(StageMatrix { stage: Stage::Lc, problem: spc.problem, data })
}

/// Scales each LC row by its criterion's weight.
pub fn apply_weights(lc: &StageMatrix, problem: &DecisionProblem) -> Result<StageMatrix, DecisionError> {
    lc.expect(Stage::Lc)?;
    if lc.data.shape() != (problem.num_criteria(), problem.num_alternatives()) {
        return Err(DecisionError::DimensionMismatch {
            expected: format!("{}x{}", problem.num_criteria(), problem.num_alternatives()),
            found: format!("{}x{}", lc.data.rows(), lc.data.cols()),
        });
    }
    if lc.problem != problem.id() {
        return Err(DecisionError::ProblemMismatch);
    }
    let mut data = lc.data.clone();
    for (i, criterion) in problem.criteria().iter().enumerate() {
        for t in data.row_mut(i) {
            *t *= criterion.weight;
        }
    }
    Ok(StageMatrix { stage: Stage::Wlc, problem: lc.problem, data })
}
