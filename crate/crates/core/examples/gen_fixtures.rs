//! Regenerates the synthetic datasets under `fixtures/`.
//!
//! cargo run -p aploco --example gen_fixtures

use std::fs;
use std::path::Path;

use aploco::dataio::write_raw_dataset;
use aploco::mlp::synthetic::{linear_dataset, oiz_dataset, oiz_schema};

pub const OIZ_ROWS: usize = 200;
pub const OIZ_SEED: u64 = 2015;
pub const LINEAR_ROWS: usize = 200;
pub const LINEAR_SEED: u64 = 11;
pub const LINEAR_COEFFICIENTS: [f64; 3] = [0.8, -0.5, 0.3];
pub const LINEAR_NOISE: f64 = 0.01;

const OIZ_MAPPING: &str = "predictor,criterion_id
mixed,C1
specialized,C2
reformed,C3
incentive_zone,C4
education_index,C5
safety_index,C6
income_wealth_index,C7
parcels_in_production,C8
passing_years,C9
";

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");

    let dir = root.join("synthetic");
    fs::create_dir_all(&dir).unwrap();
    let schema = oiz_schema();
    let records = oiz_dataset(OIZ_ROWS, OIZ_SEED);
    fs::write(dir.join("schema.json"), serde_json::to_string_pretty(&schema).unwrap() + "\n").unwrap();
    fs::write(dir.join("data.csv"), write_raw_dataset(&records, &schema)).unwrap();
    fs::write(dir.join("mapping.csv"), OIZ_MAPPING).unwrap();

    let dir = root.join("linear");
    fs::create_dir_all(&dir).unwrap();
    let (schema, records) = linear_dataset(LINEAR_ROWS, &LINEAR_COEFFICIENTS, LINEAR_NOISE, LINEAR_SEED);
    fs::write(dir.join("schema.json"), serde_json::to_string_pretty(&schema).unwrap() + "\n").unwrap();
    fs::write(dir.join("data.csv"), write_raw_dataset(&records, &schema)).unwrap();

    println!("wrote fixtures under {}", root.display());
}
