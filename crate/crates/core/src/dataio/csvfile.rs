use std::path::Path;

use super::DataError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CsvOptions {
    /// `;`-separated fields with `,` decimals, as in tables typeset with decimal commas.
    pub decimal_comma: bool,
}

impl CsvOptions {
    pub(crate) fn delimiter(self) -> u8 {
        if self.decimal_comma {
            b';'
        } else {
            b','
        }
    }

    /// Parses a finite number. Coordinates are 1-based and only used for errors.
    pub(crate) fn number(self, cell: &str, file: &str, row: usize, col: usize) -> Result<f64, DataError> {
        let text = cell.trim();
        if text.is_empty() {
            return Err(DataError::parse(file, row, col, "empty cell, expected a number"));
        }
        let normalized;
        let text = if self.decimal_comma {
            if text.contains('.') {
                return Err(DataError::parse(file, row, col, format!("{text:?}: '.' is not allowed with decimal commas")));
            }
            normalized = text.replacen(',', ".", 1);
            normalized.as_str()
        } else {
            text
        };
        let is_numeric = text.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'-' | b'+' | b'e' | b'E'));
        match text.parse::<f64>() {
            Ok(x) if is_numeric && x.is_finite() => Ok(x),
            _ => Err(DataError::parse(file, row, col, format!("{cell:?} is not a finite number"))),
        }
    }
}

/// A CSV record with its 1-based line number.
pub(crate) struct Line {
    pub number: usize,
    pub cells: Vec<String>,
}

/// Reads every record (header included) from `text`. Blank lines are skipped.
pub(crate) fn read_lines(text: &str, file: &str, options: CsvOptions) -> Result<Vec<Line>, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .delimiter(options.delimiter())
        .from_reader(text.as_bytes());
    let mut lines = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| line_of(text, p.byte() as usize));
            DataError::parse(file, line, 1, e.to_string())
        })?;
        // csv's own line counter skips blank lines; count from the byte offset instead
        let number = record.position().map_or(lines.len() + 1, |p| line_of(text, p.byte() as usize));
        if record.iter().all(str::is_empty) {
            continue;
        }
        lines.push(Line { number, cells: record.iter().map(str::to_string).collect() });
    }
    if lines.is_empty() {
        return Err(DataError::parse(file, 1, 1, "file is empty"));
    }
    Ok(lines)
}

fn line_of(text: &str, byte: usize) -> usize {
    let bytes = text.as_bytes();
    let mut start = byte.min(bytes.len());
    // the reported offset can sit before skipped blank lines
    while start < bytes.len() && matches!(bytes[start], b'\n' | b'\r') {
        start += 1;
    }
    1 + bytes[..start].iter().filter(|&&b| b == b'\n').count()
}

pub(crate) fn read_file(path: &Path) -> Result<String, DataError> {
    std::fs::read_to_string(path).map_err(|e| DataError::io(&path.display().to_string(), e))
}

/// Checks that the header starts with `expected` column names (case-insensitive).
pub(crate) fn expect_header(line: &Line, expected: &[&str], file: &str) -> Result<(), DataError> {
    for (col, name) in expected.iter().enumerate() {
        match line.cells.get(col) {
            Some(cell) if cell.eq_ignore_ascii_case(name) => {}
            Some(cell) => {
                return Err(DataError::parse(file, line.number, col + 1, format!("header {cell:?}, expected {name:?}")))
            }
            None => return Err(DataError::parse(file, line.number, col + 1, format!("missing header column {name:?}"))),
        }
    }
    Ok(())
}
