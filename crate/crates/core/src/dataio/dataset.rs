use std::collections::HashMap;
use std::path::Path;

use super::csvfile::{expect_header, read_file, read_lines, CsvOptions};
use super::DataError;
use crate::mlp::{PredictorSchema, RawRecord};

pub fn parse_schema(text: &str, file: &str) -> Result<PredictorSchema, DataError> {
    let schema: PredictorSchema = serde_json::from_str(text).map_err(|e| DataError::SchemaViolation {
        file: file.to_string(),
        row: e.line(),
        col: e.column(),
        message: e.to_string(),
    })?;
    schema.validate().map_err(|e| DataError::SchemaViolation {
        file: file.to_string(),
        row: 0,
        col: 0,
        message: e.to_string(),
    })?;
    Ok(schema)
}

pub fn load_schema(path: &Path) -> Result<PredictorSchema, DataError> {
    parse_schema(&read_file(path)?, &path.display().to_string())
}

/// Parses a dataset CSV whose header names the schema's variables (extra
/// columns are ignored). Factor cells must be declared levels; covariate and
/// target cells must be finite numbers.
pub fn parse_raw_dataset(
    text: &str,
    file: &str,
    schema: &PredictorSchema,
    options: CsvOptions,
) -> Result<Vec<RawRecord>, DataError> {
    let lines = read_lines(text, file, options)?;
    let header = &lines[0];
    let column: HashMap<&str, usize> = header.cells.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
    let locate = |name: &str| {
        column.get(name).copied().ok_or_else(|| DataError::SchemaViolation {
            file: file.to_string(),
            row: header.number,
            col: header.cells.len() + 1,
            message: format!("column {name:?} is missing from the header"),
        })
    };
    let factors = schema.factors.iter().map(|f| Ok((f, locate(&f.name)?))).collect::<Result<Vec<_>, DataError>>()?;
    let numeric = schema
        .covariates
        .iter()
        .map(|c| c.name.as_str())
        .chain(std::iter::once(schema.target.name.as_str()))
        .map(|name| Ok((name, locate(name)?)))
        .collect::<Result<Vec<_>, DataError>>()?;

    let mut records = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        if line.cells.len() != header.cells.len() {
            return Err(DataError::parse(
                file,
                line.number,
                line.cells.len().min(header.cells.len()) + 1,
                format!("expected {} cells, found {}", header.cells.len(), line.cells.len()),
            ));
        }
        let mut rec = RawRecord::default();
        for (factor, col) in &factors {
            let value = &line.cells[*col];
            if !factor.levels.iter().any(|l| l == value) {
                return Err(DataError::SchemaViolation {
                    file: file.to_string(),
                    row: line.number,
                    col: col + 1,
                    message: format!("{value:?} is not a level of factor {:?} ({:?})", factor.name, factor.levels),
                });
            }
            rec.factors.insert(factor.name.clone(), value.clone());
        }
        for (name, col) in &numeric {
            let x = options.number(&line.cells[*col], file, line.number, col + 1)?;
            rec.numbers.insert(name.to_string(), x);
        }
        records.push(rec);
    }
    if records.is_empty() {
        return Err(DataError::EmptyDataset);
    }
    Ok(records)
}

/// Loads a dataset and its schema.
pub fn load_raw_dataset(
    data: &Path,
    schema: &Path,
    options: CsvOptions,
) -> Result<(Vec<RawRecord>, PredictorSchema), DataError> {
    let schema = load_schema(schema)?;
    let records = parse_raw_dataset(&read_file(data)?, &data.display().to_string(), &schema, options)?;
    Ok((records, schema))
}

/// CSV text for `records`, columns in schema order (factors, covariates, target).
pub fn write_raw_dataset(records: &[RawRecord], schema: &PredictorSchema) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let names: Vec<&str> = schema
        .factors
        .iter()
        .map(|f| f.name.as_str())
        .chain(schema.covariates.iter().map(|c| c.name.as_str()))
        .chain(std::iter::once(schema.target.name.as_str()))
        .collect();
    w.write_record(&names).expect("in-memory write");
    for rec in records {
        let factor_cells = schema.factors.iter().map(|f| rec.factors.get(&f.name).cloned().unwrap_or_default());
        let number_cells = names[schema.factors.len()..]
            .iter()
            .map(|n| rec.numbers.get(*n).map(f64::to_string).unwrap_or_default());
        w.write_record(factor_cells.chain(number_cells)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Mapping CSV `predictor,criterion_id`, in file order.
pub fn load_mapping(path: &Path, options: CsvOptions) -> Result<Vec<(String, String)>, DataError> {
    let file = path.display().to_string();
    let lines = read_lines(&read_file(path)?, &file, options)?;
    expect_header(&lines[0], &["predictor", "criterion_id"], &file)?;
    lines[1..]
        .iter()
        .map(|line| match line.cells.as_slice() {
            [p, c] if !p.is_empty() && !c.is_empty() => Ok((p.clone(), c.clone())),
            _ => Err(DataError::parse(&file, line.number, 1, "expected `predictor,criterion_id`")),
        })
        .collect()
}
