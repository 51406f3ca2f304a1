//! Straight-line f64 reimplementation of the scoring pipeline.
#![allow(clippy::needless_range_loop)]

pub struct Naive {
    pub spc: Vec<Vec<f64>>,
    pub lc: Vec<Vec<f64>>,
    pub wlc: Vec<Vec<f64>>,
    pub beta: Vec<f64>,
    pub beta_sum: f64,
    pub alpha: Vec<f64>,
    pub theta: Vec<f64>,
    pub distance: Vec<f64>,
    pub rank: Vec<usize>,
}

/// `weights` are used as given (callers normalize).
pub fn run(values: &[Vec<f64>], maximize: &[bool], weights: &[f64]) -> Naive {
    let c = values.len();
    let r = values[0].len();
    let mut spc = vec![vec![0.0; r]; c];
    for i in 0..c {
        let mut best = values[i][0];
        for j in 1..r {
            if (maximize[i] && values[i][j] > best) || (!maximize[i] && values[i][j] < best) {
                best = values[i][j];
            }
        }
        for j in 0..r {
            spc[i][j] = if maximize[i] { best - values[i][j] } else { values[i][j] - best };
        }
    }
    let lc: Vec<Vec<f64>> = spc.iter().map(|row| row.iter().map(|p| 1.0 / (p + 2.0).ln()).collect()).collect();
    let wlc: Vec<Vec<f64>> = lc.iter().zip(weights).map(|(row, w)| row.iter().map(|l| l * w).collect()).collect();

    let mut beta = vec![0.0; c];
    for i in 0..c {
        beta[i] = wlc[i][0];
        for j in 1..r {
            if wlc[i][j] > beta[i] {
                beta[i] = wlc[i][j];
            }
        }
    }
    let mut beta_sum = 0.0;
    for b in &beta {
        beta_sum += b;
    }
    let mut alpha = vec![0.0; r];
    for j in 0..r {
        for row in &wlc {
            alpha[j] += row[j];
        }
    }
    let theta: Vec<f64> = alpha.iter().map(|a| a / beta_sum).collect();
    let distance: Vec<f64> = alpha.iter().map(|a| beta_sum - a).collect();
    let rank = (0..r)
        .map(|j| 1 + (0..r).filter(|&k| theta[k] > theta[j] || (theta[k] == theta[j] && k < j)).count())
        .collect();
    Naive { spc, lc, wlc, beta, beta_sum, alpha, theta, distance, rank }
}
