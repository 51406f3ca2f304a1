//! Logarithmic-concept multi-criteria ranking.
//!
//! The crate ranks alternatives against weighted criteria in five stages:
//!
//! 1. build a criteria × alternatives decision matrix ([`decision::DecisionProblem`]),
//! 2. measure each value's deviation from its row's best value (SPC),
//! 3. map deviations through `1 / ln(p + 2)` (LC),
//! 4. multiply by the criterion weights (WLC),
//! 5. score each alternative as the ratio of its column sum to the sum of the row optima.
//!
//! Criterion weights can be supplied directly or derived from a small multilayer
//! perceptron (see [`mlp`]): train a `d → h (tanh) → 1 (identity)` network on a
//! factor/covariate dataset and use the normalized input sensitivities as weights.
//!
//! ```
//! use aploco::decision::{rank_pipeline, Alternative, CriterionSpec, DecisionProblem, Direction, Matrix, WeightPolicy};
//!
//! let criteria = vec![
//!     CriterionSpec::new("C1", "cost", Direction::Minimize, 0.4),
//!     CriterionSpec::new("C2", "quality", Direction::Maximize, 0.6),
//! ];
//! let alternatives = vec![Alternative::new("A1"), Alternative::new("A2")];
//! let values = Matrix::from_rows(vec![vec![10.0, 12.0], vec![3.0, 5.0]]).unwrap();
//! let problem = DecisionProblem::build(criteria, alternatives, values, WeightPolicy::Strict).unwrap();
//! let report = rank_pipeline(&problem).unwrap();
//! assert_eq!(report.ranking().len(), 2);
//! ```

// `!(x <= tol)` style comparisons are used on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dataio;
pub mod decision;
pub mod mlp;
pub mod report;
pub mod rounding;

pub use decision::{rank_pipeline, DecisionError, DecisionProblem, ScoreReport};
