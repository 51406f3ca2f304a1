//! C ABI over the ranking pipeline.
//!
//! Every fallible function returns an [`AplocoStatus`]; on failure the
//! message is available from [`aploco_last_error`] on the same thread.
//! Handles are opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use aploco::dataio::{self, CsvOptions, DataError, ProblemFileSet};
use aploco::decision::{Alternative, CriterionSpec, DecisionError, DecisionProblem, Direction, WeightPolicy};
use aploco::report::RankReportDocument;
use libc::c_char;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AplocoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Io = 4,
    OutOfRange = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AplocoDirection {
    Max = 0,
    Min = 1,
}

/// Score of one alternative. `index` is its position in the input matrix;
/// `rank` starts at 1.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AplocoScore {
    pub index: usize,
    pub alpha: f64,
    pub theta: f64,
    pub distance: f64,
    pub rank: usize,
}

/// A validated decision problem.
pub struct AplocoProblem {
    inner: DecisionProblem,
}

/// A ranking computed from a problem.
pub struct AplocoReport {
    inner: RankReportDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(status: AplocoStatus, message: impl Into<String>) -> AplocoStatus {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).ok());
    status
}

fn status_of_data(e: &DataError) -> AplocoStatus {
    match e {
        DataError::Io { .. } => AplocoStatus::Io,
        _ => AplocoStatus::InvalidInput,
    }
}

/// Runs `f`, turning panics into [`AplocoStatus::Panic`].
fn guard(f: impl FnOnce() -> AplocoStatus) -> AplocoStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(AplocoStatus::Panic, format!("panic: {msg}"))
        }
    }
}

unsafe fn path_arg(p: *const c_char, what: &str) -> Result<PathBuf, AplocoStatus> {
    if p.is_null() {
        return Err(set_error(AplocoStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map(PathBuf::from)
        .map_err(|_| set_error(AplocoStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn policy(normalize: bool) -> WeightPolicy {
    if normalize {
        WeightPolicy::Normalize
    } else {
        WeightPolicy::Strict
    }
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn aploco_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn aploco_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a problem from a row-major `n_criteria × n_alternatives` matrix.
/// Criteria are named C1.., alternatives A1..
///
/// # Safety
/// `values` must point to `n_criteria * n_alternatives` doubles, `weights` and
/// `directions` to `n_criteria` elements each, and `out` must be writable.
/// Each direction is an [`AplocoDirection`] value.
#[no_mangle]
pub unsafe extern "C" fn aploco_problem_new(
    n_criteria: usize,
    n_alternatives: usize,
    values: *const f64,
    weights: *const f64,
    directions: *const i32,
    normalize_weights: bool,
    out: *mut *mut AplocoProblem,
) -> AplocoStatus {
    guard(|| {
        if out.is_null() || values.is_null() || weights.is_null() || directions.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let Some(cells) = n_criteria.checked_mul(n_alternatives) else {
            return set_error(AplocoStatus::OutOfRange, "matrix size overflows");
        };
        let values = std::slice::from_raw_parts(values, cells);
        let weights = std::slice::from_raw_parts(weights, n_criteria);
        let directions = std::slice::from_raw_parts(directions, n_criteria);

        let mut criteria = Vec::with_capacity(n_criteria);
        for (i, (&d, &w)) in directions.iter().zip(weights).enumerate() {
            let dir = match d {
                d if d == AplocoDirection::Max as i32 => Direction::Maximize,
                d if d == AplocoDirection::Min as i32 => Direction::Minimize,
                other => return set_error(AplocoStatus::InvalidInput, format!("criterion {}: direction {other}", i + 1)),
            };
            let id = format!("C{}", i + 1);
            criteria.push(CriterionSpec::new(id.clone(), id, dir, w));
        }
        let alternatives = (0..n_alternatives).map(|j| Alternative::new(format!("A{}", j + 1))).collect();
        let matrix = match aploco::decision::Matrix::from_row_major(n_criteria, n_alternatives, values.to_vec()) {
            Ok(m) => m,
            Err(e) => return set_error(AplocoStatus::InvalidInput, e.to_string()),
        };
        match DecisionProblem::build(criteria, alternatives, matrix, policy(normalize_weights)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(AplocoProblem { inner }));
                AplocoStatus::Ok
            }
            Err(e) => set_error(AplocoStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Loads a problem from matrix and criteria CSV files. `weights_path` may be
/// null; otherwise its weights replace those of the criteria file.
///
/// # Safety
/// Paths must be null or NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_problem_load(
    matrix_path: *const c_char,
    criteria_path: *const c_char,
    weights_path: *const c_char,
    decimal_comma: bool,
    normalize_weights: bool,
    out: *mut *mut AplocoProblem,
) -> AplocoStatus {
    guard(|| {
        if out.is_null() {
            return set_error(AplocoStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let files = match (|| {
            Ok(ProblemFileSet {
                matrix: path_arg(matrix_path, "matrix_path")?,
                criteria: path_arg(criteria_path, "criteria_path")?,
                weights: if weights_path.is_null() { None } else { Some(path_arg(weights_path, "weights_path")?) },
            })
        })() {
            Ok(f) => f,
            Err(status) => return status,
        };
        match dataio::load_problem(&files, CsvOptions { decimal_comma }, policy(normalize_weights)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(AplocoProblem { inner }));
                AplocoStatus::Ok
            }
            Err(e) => set_error(status_of_data(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `problem` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aploco_problem_free(problem: *mut AplocoProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// # Safety
/// `problem` must be a live handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_problem_shape(
    problem: *const AplocoProblem,
    n_criteria: *mut usize,
    n_alternatives: *mut usize,
) -> AplocoStatus {
    guard(|| {
        if problem.is_null() || n_criteria.is_null() || n_alternatives.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        let p = &(*problem).inner;
        *n_criteria = p.num_criteria();
        *n_alternatives = p.num_alternatives();
        AplocoStatus::Ok
    })
}

/// Replaces the weights of a problem in place.
///
/// # Safety
/// `problem` must be a live handle and `weights` must point to one double per criterion.
#[no_mangle]
pub unsafe extern "C" fn aploco_problem_set_weights(
    problem: *mut AplocoProblem,
    weights: *const f64,
    normalize_weights: bool,
) -> AplocoStatus {
    guard(|| {
        if problem.is_null() || weights.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        let p = &mut (*problem).inner;
        let w = std::slice::from_raw_parts(weights, p.num_criteria());
        match p.with_weights(w, policy(normalize_weights)) {
            Ok(next) => {
                *p = next;
                AplocoStatus::Ok
            }
            Err(e) => set_error(AplocoStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Ranks a problem. `timestamp` is copied into the JSON report and may be null.
///
/// # Safety
/// `problem` must be a live handle, `timestamp` null or a NUL-terminated
/// string, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_rank(
    problem: *const AplocoProblem,
    timestamp: *const c_char,
    out: *mut *mut AplocoReport,
) -> AplocoStatus {
    guard(|| {
        if problem.is_null() || out.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let timestamp = if timestamp.is_null() {
            String::new()
        } else {
            match CStr::from_ptr(timestamp).to_str() {
                Ok(s) => s.to_string(),
                Err(_) => return set_error(AplocoStatus::InvalidUtf8, "timestamp is not valid UTF-8"),
            }
        };
        match RankReportDocument::build(&(*problem).inner, timestamp) {
            Ok(inner) => {
                if let Err(e) = inner.check() {
                    return set_error(AplocoStatus::Internal, e.to_string());
                }
                *out = Box::into_raw(Box::new(AplocoReport { inner }));
                AplocoStatus::Ok
            }
            Err(e @ DecisionError::RowSpanOverflow { .. }) => set_error(AplocoStatus::InvalidInput, e.to_string()),
            Err(e) => set_error(AplocoStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `report` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_free(report: *mut AplocoReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of alternatives in a report, or 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_len(report: *const AplocoReport) -> usize {
    if report.is_null() {
        0
    } else {
        (*report).inner.alternatives.len()
    }
}

/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_beta_sum(report: *const AplocoReport, out: *mut f64) -> AplocoStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        *out = (*report).inner.beta_sum;
        AplocoStatus::Ok
    })
}

/// Row maximum of the weighted matrix for criterion `index`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_beta(report: *const AplocoReport, index: usize, out: *mut f64) -> AplocoStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        match (*report).inner.beta.as_slice().get(index) {
            Some(b) => {
                *out = *b;
                AplocoStatus::Ok
            }
            None => set_error(AplocoStatus::OutOfRange, format!("criterion index {index} out of range")),
        }
    })
}

/// Score of the alternative at input position `index`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_score(
    report: *const AplocoReport,
    index: usize,
    out: *mut AplocoScore,
) -> AplocoStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        match (*report).inner.alternatives.as_slice().get(index) {
            Some(a) => {
                *out = AplocoScore { index, alpha: a.alpha, theta: a.theta, distance: a.distance, rank: a.rank };
                AplocoStatus::Ok
            }
            None => set_error(AplocoStatus::OutOfRange, format!("alternative index {index} out of range")),
        }
    })
}

/// Input position of the alternative holding `rank` (1-based).
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_index_of_rank(
    report: *const AplocoReport,
    rank: usize,
    out: *mut usize,
) -> AplocoStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        match (*report).inner.alternatives.as_slice().iter().position(|a| a.rank == rank) {
            Some(i) => {
                *out = i;
                AplocoStatus::Ok
            }
            None => set_error(AplocoStatus::OutOfRange, format!("no alternative with rank {rank}")),
        }
    })
}

/// The report as JSON. Release the string with [`aploco_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aploco_report_to_json(report: *const AplocoReport, out: *mut *mut c_char) -> AplocoStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return set_error(AplocoStatus::NullPointer, "null argument");
        }
        match CString::new((*report).inner.to_json()) {
            Ok(s) => {
                *out = s.into_raw();
                AplocoStatus::Ok
            }
            Err(e) => set_error(AplocoStatus::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aploco_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
