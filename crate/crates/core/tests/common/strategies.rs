use proptest::prelude::*;

/// Values are multiples of 1/4 so row shifts by integers stay exact.
#[derive(Debug, Clone)]
pub struct SmallProblem {
    pub values: Vec<Vec<f64>>,
    pub maximize: Vec<bool>,
    /// Raw, not normalized.
    pub weights: Vec<f64>,
}

impl SmallProblem {
    pub fn normalized_weights(&self) -> Vec<f64> {
        let s: f64 = self.weights.iter().sum();
        self.weights.iter().map(|w| w / s).collect()
    }
}

pub fn small_problem(max_criteria: usize, max_alternatives: usize) -> impl Strategy<Value = SmallProblem> {
    (1..=max_criteria, 1..=max_alternatives).prop_flat_map(|(c, r)| {
        (
            prop::collection::vec(prop::collection::vec((-400i32..=400).prop_map(|q| q as f64 / 4.0), r), c),
            prop::collection::vec(any::<bool>(), c),
            prop::collection::vec(0.01f64..10.0, c),
        )
            .prop_map(|(values, maximize, weights)| SmallProblem { values, maximize, weights })
    })
}
