//! File formats: decision problems, weight vectors, predictor datasets.
//!
//! * matrix CSV: `criterion_id,<alternative ids...>`, one row per criterion
//! * criteria CSV: `id,name,direction,weight` with direction `max` or `min`
//! * weights CSV: `criterion_id,weight`
//! * mapping CSV: `predictor,criterion_id`
//! * schema JSON: `{"factors":[{"name","levels":[..]}],"covariates":[{"name"}],"target":{"name"}}`
//!
//! Numbers use `.` as the decimal separator. With [`CsvOptions::decimal_comma`]
//! fields are separated by `;` and decimals use `,` instead.

mod csvfile;
mod dataset;
mod describe;
mod error;
mod problem;

pub use csvfile::CsvOptions;
pub use dataset::{load_mapping, load_raw_dataset, load_schema, parse_raw_dataset, parse_schema, write_raw_dataset};
pub use describe::{describe, DescriptiveStats, VariableStats};
pub use error::DataError;
pub use problem::{
    load_criteria_ids, load_problem, load_problem_with_weights, load_weights, parse_problem, parse_weights, save_problem, write_problem, write_weights,
    ProblemFileSet,
};
