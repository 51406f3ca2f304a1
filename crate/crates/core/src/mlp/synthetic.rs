//! Seeded synthetic datasets for tests, fixtures and demos.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::{CovariateSpec, FactorSpec, PredictorSchema, RawRecord, TargetSpec};

/// `y = Σ a_m x_m + ε`, `x_m ~ U(0, 1)`, `ε ~ N(0, noise_sd²)`. Covariates are
/// named `x1, x2, …`; the target is `y`.
pub fn linear_dataset(n: usize, coefficients: &[f64], noise_sd: f64, seed: u64) -> (PredictorSchema, Vec<RawRecord>) {
    let schema = PredictorSchema {
        factors: Vec::new(),
        covariates: (1..=coefficients.len()).map(|m| CovariateSpec { name: format!("x{m}") }).collect(),
        target: TargetSpec { name: "y".into() },
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, noise_sd).expect("noise sd must be finite and non-negative");
    let records = (0..n)
        .map(|_| {
            let mut rec = RawRecord::default();
            let mut y = 0.0;
            for (m, &a) in coefficients.iter().enumerate() {
                let x: f64 = rng.gen();
                y += a * x;
                rec.numbers.insert(format!("x{}", m + 1), x);
            }
            rec.numbers.insert("y".into(), y + noise.sample(&mut rng));
            rec
        })
        .collect();
    (schema, records)
}

/// Industrial-zone schema: three binary zone-type factors, a six-level
/// incentive zone and five covariates; 17 input units after encoding.
pub fn oiz_schema() -> PredictorSchema {
    let binary = |name: &str| FactorSpec { name: name.into(), levels: vec!["0".into(), "1".into()] };
    PredictorSchema {
        factors: vec![
            binary("mixed"),
            binary("specialized"),
            binary("reformed"),
            FactorSpec { name: "incentive_zone".into(), levels: (1..=6).map(|z| z.to_string()).collect() },
        ],
        covariates: ["education_index", "income_wealth_index", "safety_index", "parcels_in_production", "passing_years"]
            .iter()
            .map(|n| CovariateSpec { name: n.to_string() })
            .collect(),
        target: TargetSpec { name: "factories_in_production".into() },
    }
}

/// Rows shaped like [`oiz_schema`]. The factory count is driven mostly by the
/// number of parcels, with smaller contributions from the incentive zone,
/// the income index and the zone age.
pub fn oiz_dataset(n: usize, seed: u64) -> Vec<RawRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, 4.0).expect("valid sd");
    (0..n)
        .map(|_| {
            let kind: f64 = rng.gen();
            let (mixed, specialized, reformed) = if kind < 0.91 {
                (1, 0, 0)
            } else if kind < 0.985 {
                (0, 1, 0)
            } else {
                (0, 0, 1)
            };
            let zone: u32 = rng.gen_range(1..=6);
            let education = round2(rng.gen_range(0.16..=0.75));
            let income = round2(rng.gen_range(0.02..=0.88));
            let safety = round2(rng.gen_range(0.40..=0.79));
            let parcels = rng.gen_range(0.0f64..=19252f64.ln()).exp().round();
            let years = f64::from(rng.gen_range(0u32..=15));
            let factories = (0.35 * parcels + 3.0 * f64::from(zone) + 20.0 * income + 0.8 * years
                - 4.0 * f64::from(reformed)
                + noise.sample(&mut rng))
            .round()
            .max(1.0);

            let mut rec = RawRecord::default();
            rec.factors.insert("mixed".into(), mixed.to_string());
            rec.factors.insert("specialized".into(), specialized.to_string());
            rec.factors.insert("reformed".into(), reformed.to_string());
            rec.factors.insert("incentive_zone".into(), zone.to_string());
            rec.numbers.insert("education_index".into(), education);
            rec.numbers.insert("income_wealth_index".into(), income);
            rec.numbers.insert("safety_index".into(), safety);
            rec.numbers.insert("parcels_in_production".into(), parcels);
            rec.numbers.insert("passing_years".into(), years);
            rec.numbers.insert("factories_in_production".into(), factories);
            rec
        })
        .collect()
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}
