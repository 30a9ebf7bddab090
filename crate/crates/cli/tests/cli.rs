use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use certiroot::rational::{pow2, ratio};
use certiroot::RootCandidateList;
use certiroot_cli::dto::CandidateListDto;
use certiroot_cli::report::EnumReport;
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_certiroot"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_kind(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["format"], 1);
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn roots_of_x_squared_minus_two() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["-2", "0", "1"]}"#);
    let v = json(&run(&["roots", "--poly", p(&f), "--precision", "16", "--format", "json"]));
    assert_eq!(v["format"], 1);
    let res = &v["result"];
    let len = res["candidates"].as_array().unwrap().len();
    assert!((2..=24).contains(&len), "{len} candidates");
    assert_eq!(res["length_bound"], 24);
    assert_eq!(res["grid"]["cauchy_bound"], "3/1");
    assert_eq!(res["grid"]["grid_bound"]["value"], "4/1");
    assert_eq!(res["grid"]["refined_precision"], 19);
    assert_eq!(res["interval_width"]["k"], 16);
    assert_eq!(v["threshold"]["source"], "default");
    assert_eq!(v["threshold"]["value"], "1/4294967296");
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);

    let report: EnumReport = serde_json::from_value(v).unwrap();
    let list = RootCandidateList::try_from(&report.result).unwrap();
    let sqrt2 = ratio(92682, 65536);
    assert!(list.covers(&sqrt2, &pow2(-15)) && list.covers(&-sqrt2, &pow2(-15)));
}

#[test]
fn threshold_from_roots_block() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["6", "-5", "1"], "roots": [{"value": "2"}, {"value": "3"}]}"#);
    let v = json(&run(&["roots", "--poly", p(&f), "-r", "4", "--format", "json"]));
    assert_eq!(v["threshold"]["source"], "separation");
    // min{1, 1/2} · 1 · 2^-8
    assert_eq!(v["threshold"]["value"], "1/512");
    assert!(v["warnings"].as_array().unwrap().is_empty());
    let values: Vec<&str> = v["result"]["candidates"].as_array().unwrap().iter().map(|c| c["value"].as_str().unwrap()).collect();
    assert!(values.contains(&"63/32") || values.contains(&"65/32"));
}

#[test]
fn intersect_with_constant_offset_is_empty() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"{"coeffs": ["1", "-3", "0", "2"]}"#);
    let b = write(&dir, "b.json", r#"{"coeffs": ["6", "-3", "0", "2"]}"#);
    let v = json(&run(&["intersect", "--a", p(&a), "--b", p(&b), "--precision", "8", "--format", "json"]));
    assert!(v["result"]["candidates"].as_array().unwrap().is_empty());
    assert_eq!(v["result"]["grid"], Value::Null);
}

#[test]
fn intersect_of_line_and_parabola() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"{"coeffs": ["0", "0", "1"]}"#);
    let b = write(&dir, "b.json", r#"{"coeffs": ["0", "1"]}"#);
    let v = json(&run(&["intersect", "--a", p(&a), "--b", p(&b), "-r", "8", "--threshold", "1/1024", "--format", "json"]));
    let report: EnumReport = serde_json::from_value(v).unwrap();
    let list = RootCandidateList::try_from(&report.result).unwrap();
    assert!(list.covers(&ratio(0, 1), &pow2(-8)) && list.covers(&ratio(1, 1), &pow2(-8)));
}

#[test]
fn sturm_counts() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["-2", "0", "1"]}"#);
    let v = json(&run(&["sturm", "--poly", p(&f), "--interval", "-3", "3", "--interval", "0", "1/2", "--format", "json"]));
    assert_eq!(v["counts"][0]["count"], 2);
    assert_eq!(v["counts"][1]["count"], 0);
    assert_eq!(v["chain"], serde_json::json!([["-2/1", "0/1", "1/1"], ["0/1", "2/1"], ["2/1"]]));
    let text = String::from_utf8(run(&["sturm", "--poly", p(&f), "--interval", "-3", "3"]).stdout).unwrap();
    assert!(text.contains("roots in (-3/1, 3/1]: 2"), "{text}");
}

#[test]
fn bounds_report() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["1", "-2", "3"]}"#);
    let v = json(&run(&["bounds", "--poly", p(&f), "--x", "1/2", "-r", "5", "--format", "json"]));
    assert_eq!(v["lipschitz_constant"], "8/1");
    assert_eq!(v["cauchy_bound"], "5/3");
    for key in ["eval_tolerance", "perturbation_bound"] {
        assert!(v[key].as_str().unwrap().contains('/'));
    }
}

#[test]
fn spectrum_trace() {
    let dir = TempDir::new().unwrap();
    let y = write(&dir, "y", "0101\n");
    let a1 = write(&dir, "a1", "1 0 1\n");
    let out = run(&["spectrum", "--y", p(&y), "--coeff", p(&a1), "--stages", "2,4", "--s", "1/2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0110\n");
    let v = json(&run(&["spectrum", "--y", p(&y), "--coeff", p(&a1), "--stages", "2,4", "--format", "json"]));
    assert_eq!(v["y_bits_per_stage"], serde_json::json!([1, 0]));
}

#[test]
fn structured_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"coeffs": ["1.5", "2"]}"#);
    assert_eq!(error_kind(&run(&["roots", "--poly", p(&bad), "-r", "4", "--format", "json"])), "ParseError");

    let zero_lead = write(&dir, "z.json", r#"{"coeffs": ["1", "2", "0"]}"#);
    assert_eq!(error_kind(&run(&["roots", "--poly", p(&zero_lead), "-r", "4", "--format", "json"])), "DegreeUnresolved");

    let a = write(&dir, "a.json", r#"{"coeffs": ["1", "1"]}"#);
    assert_eq!(
        error_kind(&run(&["intersect", "--a", p(&a), "--b", p(&a), "-r", "4", "--format", "json"])),
        "IdenticalPolynomials"
    );

    let close = write(&dir, "c.json", r#"{"coeffs": ["0", "1"], "separation": "1/8"}"#);
    assert_eq!(error_kind(&run(&["roots", "--poly", p(&close), "-r", "4", "--format", "json"])), "SeparationTooSmall");

    assert_eq!(
        error_kind(&run(&["roots", "--poly", p(&a), "-r", "4", "--threshold", "-1/2", "--format", "json"])),
        "ThresholdNonPositive"
    );

    let text = run(&["roots", "--poly", p(&bad), "-r", "4"]);
    assert_eq!(text.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&text.stderr).starts_with("error[ParseError]"));
}

#[test]
fn degree_guard_from_environment() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["1", "0", "0", "1"]}"#);
    let out = bin().args(["roots", "--poly", p(&f), "-r", "4", "--format", "json"]).env("CERTIROOT_MAX_DEGREE", "2").output().unwrap();
    assert_eq!(error_kind(&out), "DegreeLimit");
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["-1", "0", "0", "3", "1/2"], "separation": "1/4"}"#);
    for fmt in ["json", "text"] {
        let first = run(&["roots", "--poly", p(&f), "-r", "10", "--format", fmt]);
        let second = run(&["roots", "--poly", p(&f), "-r", "10", "--format", fmt]);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn candidate_list_json_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"coeffs": ["6", "-11", "6", "-1"]}"#);
    let out = run(&["roots", "--poly", p(&f), "-r", "12", "--format", "json"]);
    let report: EnumReport = serde_json::from_slice(&json_bytes(&out)).unwrap();
    let list = RootCandidateList::try_from(&report.result).unwrap();
    assert_eq!(CandidateListDto::from(&list), report.result);
    let again: CandidateListDto = serde_json::from_str(&serde_json::to_string(&report.result).unwrap()).unwrap();
    assert_eq!(RootCandidateList::try_from(&again).unwrap(), list);
}

fn json_bytes(out: &Output) -> Vec<u8> {
    assert!(out.status.success());
    out.stdout.clone()
}
