#![allow(dead_code, clippy::neg_cmp_op_on_partial_ord)]

pub mod exact;
pub mod naive;
pub mod strategies;
pub mod tables;

use aploco::decision::{Alternative, CriterionSpec, DecisionProblem, Direction, Matrix, WeightPolicy};

/// Builds a problem with ids `C1..` and `A1..`.
pub fn problem(values: &[Vec<f64>], maximize: &[bool], weights: &[f64], policy: WeightPolicy) -> DecisionProblem {
    let criteria = weights
        .iter()
        .zip(maximize)
        .enumerate()
        .map(|(i, (&w, &max))| {
            let dir = if max { Direction::Maximize } else { Direction::Minimize };
            CriterionSpec::new(format!("C{}", i + 1), format!("C{}", i + 1), dir, w)
        })
        .collect();
    let alternatives = (0..values[0].len()).map(|j| Alternative::new(format!("A{}", j + 1))).collect();
    DecisionProblem::build(criteria, alternatives, Matrix::from_rows(values.to_vec()).unwrap(), policy).unwrap()
}

/// The nine-city investment problem with the published weight column.
pub fn city_problem() -> DecisionProblem {
    let values: Vec<Vec<f64>> = tables::VALUES.iter().map(|row| row.iter().map(|s| s.parse().unwrap()).collect()).collect();
    let weights: Vec<f64> = tables::WEIGHTS.iter().map(|s| s.parse().unwrap()).collect();
    problem(&values, &tables::MAXIMIZE, &weights, WeightPolicy::Strict)
}

pub fn fixtures_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Cells of `actual` farther than `tol` from `expected`, as `(row, col, actual, expected)`.
pub fn cells_outside(actual: &[Vec<f64>], expected: &[Vec<f64>], tol: f64) -> Vec<(usize, usize, f64, f64)> {
    let mut out = Vec::new();
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert_eq!(a.len(), e.len());
        for (j, (&x, &y)) in a.iter().zip(e).enumerate() {
            if !((x - y).abs() <= tol) {
                out.push((i, j, x, y));
            }
        }
    }
    out
}

pub fn describe_cells(cells: &[(usize, usize, f64, f64)]) -> String {
    cells
        .iter()
        .map(|(i, j, a, e)| format!("C{}/A{}: {:.5} vs {}", i + 1, j + 1, a, e))
        .collect::<Vec<_>>()
        .join(", ")
}

/// [`city_problem`] with the criterion names used by the shipped fixture.
pub fn city_problem_named() -> DecisionProblem {
    const NAMES: [&str; 9] = [
        "Mixed OIZ",
        "Specialized OIZ",
        "Reformed OIZ",
        "Incentive zone",
        "Education index",
        "Safety index",
        "Income and wealth index",
        "Total number of parcels in production",
        "Passing years (average)",
    ];
    let base = city_problem();
    let criteria = base
        .criteria()
        .iter()
        .zip(NAMES)
        .map(|(c, name)| CriterionSpec::new(c.id.clone(), name, c.direction, c.weight))
        .collect();
    DecisionProblem::build(criteria, base.alternatives().to_vec(), base.values().clone(), WeightPolicy::Strict).unwrap()
}
