use serde::{Deserialize, Serialize};

use super::{apply_weights, compute_lc, compute_spc, DecisionError, DecisionProblem, Stage, StageMatrix};

/// Score of a single alternative. `index` is its column in the decision matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlternativeScore {
    pub index: usize,
    /// Column sum of the weighted matrix.
    pub alpha: f64,
    /// `alpha / beta_sum`, in `(0, 1]`.
    pub theta: f64,
    /// `beta_sum − alpha`.
    pub distance: f64,
    /// 1-based; 1 is best.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    /// Row maxima of the weighted matrix, one per criterion.
    pub beta: Vec<f64>,
    /// Sum of `beta`: the score of an ideal alternative.
    pub beta_sum: f64,
    /// One entry per alternative, in input order.
    pub alternatives: Vec<AlternativeScore>,
}

impl ScoreReport {
    /// Alternative indices ordered by rank, best first.
    pub fn ranking(&self) -> Vec<usize> {
        let mut order = vec![0; self.alternatives.len()];
        for a in &self.alternatives {
            order[a.rank - 1] = a.index;
        }
        order
    }

    pub fn best(&self) -> &AlternativeScore {
        self.alternatives.iter().find(|a| a.rank == 1).expect("non-empty report")
    }
}

/// Scores a weighted (WLC) matrix.
///
/// Ties in θ keep input order.
pub fn score(wlc: &StageMatrix) -> Result<ScoreReport, DecisionError> {
    if wlc.stage() != Stage::Wlc {
        return Err(DecisionError::StageMismatch { expected: Stage::Wlc, found: wlc.stage() });
    }
    let t = wlc.data();
    if t.rows() == 0 || t.cols() == 0 {
        return Err(DecisionError::Empty);
    }

    let beta: Vec<f64> = t.iter_rows().map(|row| row.iter().copied().fold(f64::NEG_INFINITY, f64::max)).collect();
    let beta_sum: f64 = beta.iter().sum();
    if !(beta_sum > 0.0) {
        return Err(DecisionError::InvalidStage(format!("optimal score is {beta_sum}, expected > 0")));
    }

    let alpha: Vec<f64> = (0..t.cols()).map(|j| t.column(j).sum()).collect();
    let mut alternatives: Vec<AlternativeScore> = alpha
        .iter()
        .enumerate()
        .map(|(index, &alpha)| AlternativeScore {
            index,
            alpha,
            theta: alpha / beta_sum,
            distance: beta_sum - alpha,
            rank: 0,
        })
        .collect();

    let mut order: Vec<usize> = (0..alternatives.len()).collect();
    order.sort_by(|&a, &b| alternatives[b].theta.total_cmp(&alternatives[a].theta));
    for (pos, &j) in order.iter().enumerate() {
        alternatives[j].rank = pos + 1;
    }

    Ok(ScoreReport { beta, beta_sum, alternatives })
}

/// Runs all stages: SPC → LC → WLC → scores.
pub fn rank_pipeline(problem: &DecisionProblem) -> Result<ScoreReport, DecisionError> {
    let lc = compute_lc(&compute_spc(problem))?;
    score(&apply_weights(&lc, problem)?)
}
