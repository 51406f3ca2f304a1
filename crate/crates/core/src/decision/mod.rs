//! The five ranking stages as pure functions over in-memory matrices.

mod error;
mod matrix;
mod problem;
mod score;
mod stages;

pub use error::DecisionError;
pub use matrix::Matrix;
pub use problem::{
    build_problem, Alternative, CriterionSpec, DecisionProblem, Direction, ProblemId, WeightPolicy,
    WEIGHT_SUM_TOLERANCE,
};
pub use score::{rank_pipeline, score, AlternativeScore, ScoreReport};
pub use stages::{apply_weights, compute_lc, compute_spc, Stage, StageMatrix, LC_MAX};
