use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

use super::csvfile::{expect_header, read_file, read_lines, CsvOptions};
use super::DataError;
use crate::decision::{Alternative, CriterionSpec, DecisionProblem, Direction, Matrix, WeightPolicy};

/// Input files for one decision problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFileSet {
    pub matrix: PathBuf,
    pub criteria: PathBuf,
    /// Replaces the criteria file's weight column.
    pub weights: Option<PathBuf>,
}

pub fn load_problem(files: &ProblemFileSet, options: CsvOptions, policy: WeightPolicy) -> Result<DecisionProblem, DataError> {
    let weights = match &files.weights {
        Some(path) => Some(parse_weights(&read_file(path)?, &path.display().to_string(), options)?),
        None => None,
    };
    load_problem_with_weights(files, weights.as_deref(), options, policy)
}

/// Like [`load_problem`] with in-memory weights; `files.weights` is ignored.
pub fn load_problem_with_weights(
    files: &ProblemFileSet,
    weights: Option<&[(String, f64)]>,
    options: CsvOptions,
    policy: WeightPolicy,
) -> Result<DecisionProblem, DataError> {
    let matrix = read_file(&files.matrix)?;
    let criteria = read_file(&files.criteria)?;
    parse_problem_named(
        (&matrix, &files.matrix.display().to_string()),
        (&criteria, &files.criteria.display().to_string()),
        weights,
        options,
        policy,
    )
}

/// Parses in-memory file contents. `weights` overrides the criteria file's weights.
pub fn parse_problem(
    matrix: &str,
    criteria: &str,
    weights: Option<&[(String, f64)]>,
    options: CsvOptions,
    policy: WeightPolicy,
) -> Result<DecisionProblem, DataError> {
    parse_problem_named((matrix, "matrix.csv"), (criteria, "criteria.csv"), weights, options, policy)
}

struct MatrixRows {
    alternatives: Vec<String>,
    rows: Vec<(String, usize, Vec<f64>)>,
}

fn parse_matrix(text: &str, file: &str, options: CsvOptions) -> Result<MatrixRows, DataError> {
    let lines = read_lines(text, file, options)?;
    let header = &lines[0];
    let alternatives: Vec<String> = header.cells[1..].to_vec();
    if alternatives.is_empty() {
        return Err(DataError::parse(file, header.number, 2, "header lists no alternatives"));
    }
    if let Some(col) = alternatives.iter().position(String::is_empty) {
        return Err(DataError::parse(file, header.number, col + 2, "empty alternative id"));
    }
    if lines.len() < 2 {
        return Err(DataError::parse(file, header.number + 1, 1, "no criterion rows"));
    }
    let mut rows = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        if line.cells.len() != alternatives.len() + 1 {
            return Err(DataError::parse(
                file,
                line.number,
                line.cells.len().min(alternatives.len() + 1) + 1,
                format!("expected {} cells, found {}", alternatives.len() + 1, line.cells.len()),
            ));
        }
        let id = line.cells[0].clone();
        if id.is_empty() {
            return Err(DataError::parse(file, line.number, 1, "empty criterion id"));
        }
        let values = line.cells[1..]
            .iter()
            .enumerate()
            .map(|(j, cell)| options.number(cell, file, line.number, j + 2))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((id, line.number, values));
    }
    Ok(MatrixRows { alternatives, rows })
}

fn parse_criteria(
    text: &str,
    file: &str,
    options: CsvOptions,
    weights: Option<&HashMap<&str, f64>>,
) -> Result<Vec<CriterionSpec>, DataError> {
    let lines = read_lines(text, file, options)?;
    expect_header(&lines[0], &["id", "name", "direction", "weight"], file)?;
    let mut out = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        if line.cells.len() != 4 {
            return Err(DataError::parse(file, line.number, line.cells.len().min(4) + 1, "expected 4 cells"));
        }
        let id = &line.cells[0];
        if id.is_empty() {
            return Err(DataError::parse(file, line.number, 1, "empty criterion id"));
        }
        let direction: Direction = line.cells[2].parse().map_err(|e: String| DataError::parse(file, line.number, 3, e))?;
        let overridden = weights.and_then(|w| w.get(id.as_str()).copied());
        let weight = match overridden {
            Some(w) => w,
            None => options.number(&line.cells[3], file, line.number, 4)?,
        };
        out.push(CriterionSpec::new(id.clone(), line.cells[1].clone(), direction, weight));
    }
    if out.is_empty() {
        return Err(DataError::parse(file, lines[0].number + 1, 1, "no criteria listed"));
    }
    Ok(out)
}

fn parse_problem_named(
    (matrix, matrix_file): (&str, &str),
    (criteria, criteria_file): (&str, &str),
    weights: Option<&[(String, f64)]>,
    options: CsvOptions,
    policy: WeightPolicy,
) -> Result<DecisionProblem, DataError> {
    let m = parse_matrix(matrix, matrix_file, options)?;
    let weight_map: Option<HashMap<&str, f64>> = weights.map(|w| w.iter().map(|(id, w)| (id.as_str(), *w)).collect());
    let specs = parse_criteria(criteria, criteria_file, options, weight_map.as_ref())?;

    let matrix_ids: HashSet<&str> = m.rows.iter().map(|r| r.0.as_str()).collect();
    let criteria_ids: HashSet<&str> = specs.iter().map(|c| c.id.as_str()).collect();
    if matrix_ids != criteria_ids {
        let mut missing: Vec<_> = criteria_ids.difference(&matrix_ids).copied().collect();
        let mut extra: Vec<_> = matrix_ids.difference(&criteria_ids).copied().collect();
        missing.sort_unstable();
        extra.sort_unstable();
        return Err(DataError::IdMismatch(format!(
            "criteria absent from {matrix_file}: {missing:?}; matrix rows absent from {criteria_file}: {extra:?}"
        )));
    }
    if let Some(w) = &weight_map {
        let weight_ids: HashSet<&str> = w.keys().copied().collect();
        if weight_ids != criteria_ids {
            let mut diff: Vec<_> = weight_ids.symmetric_difference(&criteria_ids).copied().collect();
            diff.sort_unstable();
            return Err(DataError::IdMismatch(format!("weights file and criteria file disagree on {diff:?}")));
        }
    }

    // duplicate matrix rows would collapse in the id sets above
    let mut by_id: HashMap<&str, &Vec<f64>> = HashMap::new();
    for (id, line, values) in &m.rows {
        if by_id.insert(id.as_str(), values).is_some() {
            return Err(DataError::parse(matrix_file, *line, 1, format!("duplicate criterion id {id:?}")));
        }
    }
    let rows: Vec<Vec<f64>> = specs
        .iter()
        .map(|c| by_id.get(c.id.as_str()).map(|v| (*v).clone()).unwrap_or_default())
        .collect();
    let values = Matrix::from_rows(rows)?;
    let alternatives = m.alternatives.into_iter().map(Alternative::new).collect();
    Ok(DecisionProblem::build(specs, alternatives, values, policy)?)
}

/// Criterion ids from a criteria CSV, in file order.
pub fn load_criteria_ids(path: &Path, options: CsvOptions) -> Result<Vec<String>, DataError> {
    let file = path.display().to_string();
    let lines = read_lines(&read_file(path)?, &file, options)?;
    expect_header(&lines[0], &["id", "name", "direction", "weight"], &file)?;
    lines[1..]
        .iter()
        .map(|line| match line.cells.first() {
            Some(id) if !id.is_empty() => Ok(id.clone()),
            _ => Err(DataError::parse(&file, line.number, 1, "empty criterion id")),
        })
        .collect()
}

pub fn parse_weights(text: &str, file: &str, options: CsvOptions) -> Result<Vec<(String, f64)>, DataError> {
    let lines = read_lines(text, file, options)?;
    expect_header(&lines[0], &["criterion_id", "weight"], file)?;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(lines.len() - 1);
    for line in &lines[1..] {
        if line.cells.len() != 2 {
            return Err(DataError::parse(file, line.number, line.cells.len().min(2) + 1, "expected 2 cells"));
        }
        let id = line.cells[0].clone();
        if !seen.insert(id.clone()) {
            return Err(DataError::parse(file, line.number, 1, format!("duplicate criterion id {id:?}")));
        }
        out.push((id, options.number(&line.cells[1], file, line.number, 2)?));
    }
    Ok(out)
}

pub fn load_weights(path: &Path, options: CsvOptions) -> Result<Vec<(String, f64)>, DataError> {
    parse_weights(&read_file(path)?, &path.display().to_string(), options)
}

/// Weights CSV text.
pub fn write_weights(weights: &[(String, f64)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["criterion_id", "weight"]).expect("in-memory write");
    for (id, weight) in weights {
        w.write_record([id.clone(), weight.to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// `(matrix CSV, criteria CSV)` text for `problem`. Numbers are written in
/// shortest round-trip form, so parsing the output gives back identical values.
pub fn write_problem(problem: &DecisionProblem) -> (String, String) {
    let mut m = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("criterion_id".to_string()).chain(problem.alternatives().iter().map(|a| a.id.clone()));
    m.write_record(header).expect("in-memory write");
    for (c, row) in problem.criteria().iter().zip(problem.values().iter_rows()) {
        m.write_record(std::iter::once(c.id.clone()).chain(row.iter().map(f64::to_string))).expect("in-memory write");
    }

    let mut k = csv::Writer::from_writer(Vec::new());
    k.write_record(["id", "name", "direction", "weight"]).expect("in-memory write");
    for c in problem.criteria() {
        k.write_record([c.id.clone(), c.name.clone(), c.direction.to_string(), c.weight.to_string()])
            .expect("in-memory write");
    }
    let text = |w: csv::Writer<Vec<u8>>| String::from_utf8(w.into_inner().expect("flush")).expect("utf-8");
    (text(m), text(k))
}

pub fn save_problem(problem: &DecisionProblem, matrix: &Path, criteria: &Path) -> Result<(), DataError> {
    let (m, c) = write_problem(problem);
    std::fs::write(matrix, m).map_err(|e| DataError::io(&matrix.display().to_string(), e))?;
    std::fs::write(criteria, c).map_err(|e| DataError::io(&criteria.display().to_string(), e))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const MATRIX: &str = "criterion_id,A1,A2,A3\nC1,2,7,1\nC2,0,0,1\n";
    const CRITERIA: &str = "id,name,direction,weight\nC1,first,max,0.4\nC2,second,min,0.6\n";

    fn parse(m: &str, c: &str) -> Result<DecisionProblem, DataError> {
        parse_problem(m, c, None, CsvOptions::default(), WeightPolicy::Strict)
    }

    fn coords(err: DataError) -> (usize, usize) {
        match err {
            DataError::Parse { row, col, .. } => (row, col),
            e => panic!("expected a parse error, got {e}"),
        }
    }

    #[test]
    fn loads_small_problem() {
        let p = parse(MATRIX, CRITERIA).unwrap();
        assert_eq!(p.values().row(1), &[0.0, 0.0, 1.0]);
        assert_eq!(p.criteria()[1].direction, Direction::Minimize);
        assert_eq!(p.alternatives()[2].id, "A3");
    }

    #[test]
    fn criteria_order_wins_over_matrix_order() {
        let c = "id,name,direction,weight\nC2,second,min,0.6\nC1,first,max,0.4\n";
        let p = parse(MATRIX, c).unwrap();
        assert_eq!(p.criteria()[0].id, "C2");
        assert_eq!(p.values().row(0), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn empty_matrix_is_a_parse_error() {
        assert!(matches!(parse("", CRITERIA), Err(DataError::Parse { .. })));
        assert!(matches!(parse("criterion_id,A1\n", CRITERIA), Err(DataError::Parse { .. })));
    }

    #[test]
    fn unknown_criterion_is_an_id_mismatch() {
        let c = format!("{CRITERIA}C10,extra,max,0\n");
        assert!(matches!(parse(MATRIX, &c), Err(DataError::IdMismatch(_))));
    }

    #[test]
    fn bad_cells_carry_coordinates() {
        assert_eq!(coords(parse("criterion_id,A1,A2,A3\nC1,2,x,1\nC2,0,0,1\n", CRITERIA).unwrap_err()), (2, 3));
        assert_eq!(coords(parse("criterion_id,A1,A2,A3\nC1,2,7\nC2,0,0,1\n", CRITERIA).unwrap_err()), (2, 4));
        let c = "id,name,direction,weight\nC1,first,up,0.4\nC2,second,min,0.6\n";
        assert_eq!(coords(parse(MATRIX, c).unwrap_err()), (2, 3));
        let c = "id,name,dir,weight\n";
        assert_eq!(coords(parse(MATRIX, c).unwrap_err()), (1, 3));
    }

    #[test]
    fn weights_override() {
        let w = parse_weights("criterion_id,weight\nC1,0.9\nC2,0.1\n", "w.csv", CsvOptions::default()).unwrap();
        let p = parse_problem(MATRIX, CRITERIA, Some(&w), CsvOptions::default(), WeightPolicy::Strict).unwrap();
        assert_eq!(p.weights(), vec![0.9, 0.1]);

        let partial = vec![("C1".to_string(), 1.0)];
        let err = parse_problem(MATRIX, CRITERIA, Some(&partial), CsvOptions::default(), WeightPolicy::Strict).unwrap_err();
        assert!(matches!(err, DataError::IdMismatch(_)));
    }

    #[test]
    fn weight_column_may_be_blank_when_overridden() {
        let c = "id,name,direction,weight\nC1,first,max,\nC2,second,min,\n";
        let w = vec![("C1".to_string(), 0.5), ("C2".to_string(), 0.5)];
        assert!(parse_problem(MATRIX, c, Some(&w), CsvOptions::default(), WeightPolicy::Strict).is_ok());
        assert!(parse(MATRIX, c).is_err());
    }

    #[test]
    fn decimal_comma_files() {
        let m = "criterion_id;A1;A2\nC1;0,45;0,55\n";
        let c = "id;name;direction;weight\nC1;edu;max;1,0\n";
        let p = parse_problem(m, c, None, CsvOptions { decimal_comma: true }, WeightPolicy::Strict).unwrap();
        assert_eq!(p.values().row(0), &[0.45, 0.55]);
    }

    #[test]
    fn written_problem_reparses_identically() {
        let p = parse(MATRIX, CRITERIA).unwrap();
        let (m, c) = write_problem(&p);
        assert_eq!(parse(&m, &c).unwrap(), p);
    }
}
