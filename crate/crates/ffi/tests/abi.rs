use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::ptr;

use aploco_ffi::*;

fn fixture(name: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/oiz2015").join(name);
    CString::new(p.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    let p = aploco_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn loads_fixture_and_ranks() {
    let mut problem = ptr::null_mut();
    let status = unsafe {
        aploco_problem_load(fixture("matrix.csv").as_ptr(), fixture("criteria.csv").as_ptr(), ptr::null(), false, false, &mut problem)
    };
    assert_eq!(status, AplocoStatus::Ok);

    let (mut c, mut r) = (0, 0);
    assert_eq!(unsafe { aploco_problem_shape(problem, &mut c, &mut r) }, AplocoStatus::Ok);
    assert_eq!((c, r), (9, 9));

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { aploco_rank(problem, ptr::null(), &mut report) }, AplocoStatus::Ok);
    assert_eq!(unsafe { aploco_report_len(report) }, 9);

    let order: Vec<usize> = (1..=9)
        .map(|rank| {
            let mut i = usize::MAX;
            assert_eq!(unsafe { aploco_report_index_of_rank(report, rank, &mut i) }, AplocoStatus::Ok);
            i + 1
        })
        .collect();
    assert_eq!(order, [6, 8, 5, 9, 7, 4, 2, 1, 3]);

    let mut beta_sum = 0.0;
    assert_eq!(unsafe { aploco_report_beta_sum(report, &mut beta_sum) }, AplocoStatus::Ok);
    assert!((beta_sum - std::f64::consts::LOG2_E).abs() < 1e-12);

    let mut score = AplocoScore { index: 0, alpha: 0.0, theta: 0.0, distance: 0.0, rank: 0 };
    assert_eq!(unsafe { aploco_report_score(report, 5, &mut score) }, AplocoStatus::Ok);
    assert_eq!(score.rank, 1);
    assert!((score.distance - 0.0782).abs() < 1e-4);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { aploco_report_to_json(report, &mut json) }, AplocoStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    assert!(text.contains("\"schema_version\""));
    unsafe {
        aploco_string_free(json);
        aploco_report_free(report);
        aploco_problem_free(problem);
    }
}

#[test]
fn builds_problem_from_arrays() {
    let values = [1.0, 3.0, 2.0, 5.0, 4.0, 4.0];
    let weights = [0.5, 0.5];
    let directions = [AplocoDirection::Max as i32, AplocoDirection::Min as i32];
    let mut problem = ptr::null_mut();
    let status = unsafe { aploco_problem_new(2, 3, values.as_ptr(), weights.as_ptr(), directions.as_ptr(), false, &mut problem) };
    assert_eq!(status, AplocoStatus::Ok);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { aploco_rank(problem, ptr::null(), &mut report) }, AplocoStatus::Ok);
    for i in 0..3 {
        let mut s = AplocoScore { index: 0, alpha: 0.0, theta: 0.0, distance: 0.0, rank: 0 };
        assert_eq!(unsafe { aploco_report_score(report, i, &mut s) }, AplocoStatus::Ok);
        assert!(s.theta > 0.0 && s.theta <= 1.0);
    }
    let mut b = 0.0;
    assert_eq!(unsafe { aploco_report_beta(report, 2, &mut b) }, AplocoStatus::OutOfRange);
    assert!(last_error().contains("out of range"));

    assert_eq!(unsafe { aploco_problem_set_weights(problem, [2.0, 6.0].as_ptr(), true) }, AplocoStatus::Ok);
    assert_eq!(unsafe { aploco_problem_set_weights(problem, [2.0, 6.0].as_ptr(), false) }, AplocoStatus::InvalidInput);
    unsafe {
        aploco_report_free(report);
        aploco_problem_free(problem);
    }
}

#[test]
fn reports_errors_through_status_and_message() {
    let mut problem = ptr::null_mut();
    let values = [1.0, f64::NAN];
    let status = unsafe { aploco_problem_new(1, 2, values.as_ptr(), [1.0].as_ptr(), [0].as_ptr(), false, &mut problem) };
    assert_eq!(status, AplocoStatus::InvalidInput);
    assert!(problem.is_null());
    assert!(!last_error().is_empty());

    let status = unsafe { aploco_problem_new(1, 1, [1.0].as_ptr(), [1.0].as_ptr(), [7].as_ptr(), false, &mut problem) };
    assert_eq!(status, AplocoStatus::InvalidInput);
    assert!(last_error().contains("direction 7"));

    let missing = CString::new("/nonexistent/matrix.csv").unwrap();
    let status =
        unsafe { aploco_problem_load(missing.as_ptr(), fixture("criteria.csv").as_ptr(), ptr::null(), false, false, &mut problem) };
    assert_eq!(status, AplocoStatus::Io);

    let status = unsafe { aploco_problem_load(ptr::null(), ptr::null(), ptr::null(), false, false, &mut problem) };
    assert_eq!(status, AplocoStatus::NullPointer);

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { aploco_rank(ptr::null(), ptr::null(), &mut report) }, AplocoStatus::NullPointer);
    assert_eq!(unsafe { aploco_report_len(ptr::null()) }, 0);

    // a successful call clears the message
    let mut one = ptr::null_mut();
    unsafe { aploco_problem_new(1, 1, [1.0].as_ptr(), [1.0].as_ptr(), [0].as_ptr(), false, &mut one) };
    assert!(aploco_last_error().is_null());
    unsafe { aploco_problem_free(one) };
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        aploco_problem_free(ptr::null_mut());
        aploco_report_free(ptr::null_mut());
        aploco_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(aploco_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn c_compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
}

const C_PROGRAM: &str = r#"#include <stdio.h>
#include "aploco.h"
int main(void) {
    AplocoProblem *p = NULL;
    AplocoReport *r = NULL;
    double v[4] = {1.0, 2.0, 5.0, 3.0}, w[2] = {0.5, 0.5};
    int32_t d[2] = {APLOCO_DIRECTION_MAX, APLOCO_DIRECTION_MIN};
    if (aploco_problem_new(2, 2, v, w, d, false, &p) != APLOCO_STATUS_OK) return 1;
    if (aploco_rank(p, NULL, &r) != APLOCO_STATUS_OK) return 2;
    size_t best = 99;
    if (aploco_report_index_of_rank(r, 1, &best) != APLOCO_STATUS_OK) return 3;
    AplocoScore s;
    if (aploco_report_score(r, 7, &s) != APLOCO_STATUS_OUT_OF_RANGE) return 4;
    printf("best=%zu error=%s\n", best, aploco_last_error());
    aploco_report_free(r);
    aploco_problem_free(p);
    return 0;
}
"#;

#[test]
fn header_compiles_as_c() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let out = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn c_program_links_against_shared_library() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    // target/<profile>/deps/abi-* -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    if !profile_dir.join("libaploco_ffi.so").exists() {
        eprintln!("shared library not built; skipping");
        return;
    }
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let out = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg("-L")
        .arg(&profile_dir)
        .args(["-laploco_ffi", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let run = std::process::Command::new(&exe).env("LD_LIBRARY_PATH", &profile_dir).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.starts_with("best=1 error=alternative index 7 out of range"), "{stdout}");
}
