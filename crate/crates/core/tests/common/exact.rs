//! Fixed-point big-integer evaluation of the scoring pipeline, 60 decimal
//! digits after the point. Inputs are decimal strings, so deviations are exact
//! and only the logarithm and the divisions round.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

const DIGITS: usize = 60;

fn scale() -> BigInt {
    BigInt::from(10).pow(DIGITS as u32)
}

pub fn parse(s: &str) -> BigInt {
    let (neg, s) = s.strip_prefix('-').map_or((false, s), |r| (true, r));
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    assert!(frac.len() <= DIGITS);
    let digits = format!("{int}{frac}{}", "0".repeat(DIGITS - frac.len()));
    let v: BigInt = digits.parse().unwrap();
    if neg {
        -v
    } else {
        v
    }
}

pub fn to_f64(x: &BigInt) -> f64 {
    let neg = x.is_negative();
    let s = x.abs().to_string();
    let s = if s.len() <= DIGITS { format!("{}{s}", "0".repeat(DIGITS + 1 - s.len())) } else { s };
    let (int, frac) = s.split_at(s.len() - DIGITS);
    let v: f64 = format!("{int}.{frac}").parse().unwrap();
    if neg {
        -v
    } else {
        v
    }
}

fn mul(a: &BigInt, b: &BigInt) -> BigInt {
    a * b / scale()
}

fn div(a: &BigInt, b: &BigInt) -> BigInt {
    a * scale() / b
}

/// `atanh(z)` for `|z| < 1` by its odd power series.
fn atanh(z: &BigInt) -> BigInt {
    let z2 = mul(z, z);
    let mut power = z.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u32;
    while !power.is_zero() {
        sum += &power / BigInt::from(k);
        power = mul(&power, &z2);
        k += 2;
    }
    sum
}

/// Natural log of a fixed-point `x >= 1`.
pub fn ln(x: &BigInt) -> BigInt {
    let one = scale();
    let two = &one * 2;
    assert!(*x >= one);
    let mut m = x.clone();
    let mut halvings = 0u32;
    while m >= two {
        m /= 2;
        halvings += 1;
    }
    // ln m = 2 atanh((m-1)/(m+1)), ln 2 = 2 atanh(1/3)
    let ln_m = atanh(&div(&(&m - &one), &(&m + &one))) * 2;
    let ln2 = atanh(&div(&one, &(&one * 3))) * 2;
    ln_m + ln2 * halvings
}

pub struct Exact {
    pub spc: Vec<Vec<BigInt>>,
    pub lc: Vec<Vec<BigInt>>,
    pub wlc: Vec<Vec<BigInt>>,
    pub beta: Vec<BigInt>,
    pub beta_sum: BigInt,
    pub alpha: Vec<BigInt>,
    pub theta: Vec<BigInt>,
}

impl Exact {
    pub fn run(values: &[&[&str]], maximize: &[bool], weights: &[&str]) -> Self {
        let two = scale() * 2;
        let weights: Vec<BigInt> = weights.iter().map(|w| parse(w)).collect();
        let mut spc = Vec::new();
        for (row, &max) in values.iter().zip(maximize) {
            let row: Vec<BigInt> = row.iter().map(|s| parse(s)).collect();
            let best = if max { row.iter().max().unwrap().clone() } else { row.iter().min().unwrap().clone() };
            spc.push(row.iter().map(|x| if max { &best - x } else { x - &best }).collect::<Vec<_>>());
        }
        let lc: Vec<Vec<BigInt>> = spc.iter().map(|row| row.iter().map(|p| div(&scale(), &ln(&(p + &two)))).collect()).collect();
        let wlc: Vec<Vec<BigInt>> =
            lc.iter().zip(&weights).map(|(row, w)| row.iter().map(|l| mul(l, w)).collect()).collect();
        let beta: Vec<BigInt> = wlc.iter().map(|row| row.iter().max().unwrap().clone()).collect();
        let beta_sum: BigInt = beta.iter().sum();
        let r = wlc[0].len();
        let alpha: Vec<BigInt> = (0..r).map(|j| wlc.iter().map(|row| &row[j]).sum()).collect();
        let theta = alpha.iter().map(|a| div(a, &beta_sum)).collect();
        Exact { spc, lc, wlc, beta, beta_sum, alpha, theta }
    }

    /// Alternatives best first (0-based), ties by input order.
    pub fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.theta.len()).collect();
        order.sort_by(|&a, &b| match self.theta[b].cmp(&self.theta[a]) {
            Ordering::Equal => a.cmp(&b),
            o => o,
        });
        order
    }

    pub fn matrix_f64(m: &[Vec<BigInt>]) -> Vec<Vec<f64>> {
        m.iter().map(|row| row.iter().map(to_f64).collect()).collect()
    }

    pub fn vec_f64(v: &[BigInt]) -> Vec<f64> {
        v.iter().map(to_f64).collect()
    }
}
