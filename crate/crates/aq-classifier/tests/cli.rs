//! End-to-end runs of the aq binary: output formats, class selectors, and
//! the exit-code contract (0 ok, 1 verify failure, 2 usage, 3 unrealizable).

use std::process::{Command, Output};

use aq_classifier::record::{build_records, from_csv, from_json};
use aq_classifier::build_root_data;

fn aq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aq"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_json_matches_the_library() {
    let out = aq(&["classify", "--m", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc = from_json(&stdout_of(&out)).unwrap();
    assert_eq!(doc.m, 2);
    assert_eq!(doc.count, 9);
    let data = build_root_data(2).unwrap();
    assert_eq!(doc.classes, build_records(&data).unwrap());
}

#[test]
fn classify_csv_round_trips() {
    let out = aq(&["classify", "--m", "3", "--format", "csv"]);
    assert!(out.status.success());
    let records = from_csv(&stdout_of(&out)).unwrap();
    let data = build_root_data(3).unwrap();
    assert_eq!(records, build_records(&data).unwrap());
}

#[test]
fn classify_latex_emits_a_table() {
    let out = aq(&["classify", "--m", "4", "--format", "latex"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("\\begin{tabular}{llllll}"));
    assert!(text.contains("\\end{tabular}"));
}

#[test]
fn classify_text_marks_discrete_classes() {
    let out = aq(&["classify", "--m", "1", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 3);
    assert_eq!(text.lines().filter(|l| l.contains("discrete")).count(), 2);
}

#[test]
fn classify_rejects_m_zero_with_usage_exit() {
    let out = aq(&["classify", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poincare_prints_known_polynomials() {
    let out = aq(&["poincare", "--m", "2", "--ideal", "", "--filter", ""]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("P(x,t) = 1 + 2*x*t + x^2*t^2"));

    let out = aq(&["poincare", "--m", "3", "--filter", "1,0;1,1;1,2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("P(x,t) = x^3"));
    assert!(text.contains("P(t) = t^3"));
}

#[test]
fn poincare_accepts_an_index_selector() {
    let out = aq(&["poincare", "--m", "5", "--index", "0"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("P(x,t) = 1 + "));

    let out = aq(&["poincare", "--m", "5", "--index", "15"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn poincare_unrealizable_pair_exits_3() {
    // a lone minimal ideal below the top of the chain cannot be realized
    let out = aq(&["poincare", "--m", "3", "--ideal", "1,0"]);
    assert_eq!(out.status.code(), Some(3));

    // ill-shaped subsets (not a down-set) are unrealizable input too
    let out = aq(&["poincare", "--m", "3", "--ideal", "1,1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn poincare_malformed_root_exits_2() {
    let out = aq(&["poincare", "--m", "3", "--ideal", "9,9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = aq(&["poincare", "--m", "3", "--ideal", "1,x"]);
    assert_eq!(out.status.code(), Some(2));

    let out = aq(&["poincare", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_range_passes() {
    let out = aq(&["verify", "--m-max", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("m=1 counts: ok"));
    assert!(text.contains("checks passed"));
}

#[test]
fn verify_honors_the_grid_radius_env_var() {
    let out = Command::new(env!("CARGO_BIN_EXE_aq"))
        .args(["verify", "--m-max", "1"])
        .env("AQ_GRID_RADIUS", "1")
        .output()
        .expect("binary must run");
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("grid radius 1"));
}
