use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conic-locus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

#[test]
fn monomial_222_locus() {
    let v = json(&["locus", "--monomial-ci", "2", "2", "2"]);
    assert_eq!(v["codim"], 3);
    assert_eq!(v["total_ideal"], serde_json::json!(["a2", "a3", "a5"]));
    assert_eq!(v["type"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["e"], 3);
    assert_eq!(v["field"], "F_32003");
    assert_eq!(v["seeds"], serde_json::json!([1]));
    assert!(v["version"].is_string());
}

#[test]
fn expected_codim_classifier() {
    let o = run(&["expected-codim", "--ci", "2", "3", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3");
    assert_eq!(json(&["expected-codim", "--ci", "2", "2", "4"])["expected_codim"], 2);
}

#[test]
fn conic_test_semi_example() {
    let o = run(&["conic-test", "--ideal", "x1^2,x2^2,x3^4", "--conic", "x1*x2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("non-Lefschetz: first failing degree i = 1"));
    let v = json(&["conic-test", "--ideal", "x^2, y^2, z^4", "--conic", "x*y + z^2"]);
    assert_eq!(v["lefschetz"], true);
    assert_eq!(v["failing_degree"], Value::Null);
}

#[test]
fn json_is_byte_identical() {
    let args = ["locus", "--random-ci", "2", "3", "3", "--seed", "7", "--slicing", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rational_field_and_ideal_file() {
    let src = format!("@{}", data("semi.ideal"));
    let v = json(&["--field", "q", "locus", "--ideal", &src]);
    assert_eq!(v["field"], "Q");
    assert_eq!(v["codim"], 1);
    let total: Vec<String> = serde_json::from_value(v["total_ideal"].clone()).unwrap();
    assert!(total.contains(&"2*a3*a5*a6 - a2*a6^2".to_string()), "{total:?}");
}

#[test]
fn custom_prime() {
    let v = json(&["hilbert", "--ci", "2", "2", "3", "--field", "p", "101"]);
    assert_eq!(v["field"], "F_101");
    assert_eq!(v["hf"], serde_json::json!([1, 3, 4, 3, 1]));
    assert_eq!(v["gorenstein"], true);
}

#[test]
fn module_inputs() {
    let v = json(&["locus", "--module", &data("ci222.pres")]);
    assert_eq!(v["total_ideal"], serde_json::json!(["a2", "a3", "a5"]));
    let v = json(&["hilbert", "--module", &data("rank2.pres")]);
    assert_eq!(v["hf"], serde_json::json!([2, 6, 8, 8, 6, 2]));
    let v = json(&["locus", "--module", &data("rank2.pres"), "--slicing"]);
    assert_eq!(v["codim"], v["slicing"]["codim"]);
}

#[test]
fn certificates() {
    let v = json(&["wlp", "--random-ci", "2", "2", "3", "--seed", "3"]);
    assert_eq!(v["found"], true);
    assert_eq!(v["seeds"], serde_json::json!([3]));
    let v = json(&["slp2", "--monomial-ci", "3", "3", "3", "--trials", "3"]);
    assert_eq!(v["found"], true);
}

#[test]
fn middle_mode() {
    let v = json(&["locus", "--monomial-ci", "2", "2", "4", "--mode", "middle"]);
    assert_eq!(v["mode"], "middle-only");
    assert_eq!(v["codim"], 1);
    assert_eq!(v["wlp"]["found"], true);
    let o = run(&["locus", "--ideal", "x1^2, x1*x2, x2^3, x3^2", "--mode", "middle"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not Gorenstein"));
}

#[test]
fn gorenstein_command() {
    let v = json(&["gorenstein", "--socle-degree", "4", "--seed", "1", "--locus"]);
    assert_eq!(v["hf"], serde_json::json!([1, 3, 6, 3, 1]));
    assert_eq!(v["si_sequence"], true);
    assert_eq!(v["locus"]["codim"], 1);
    assert_eq!(v["locus"]["degree"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["locus", "--ideal", "x1^2, x2^2"]).status.code(), Some(1));
    let o = run(&["locus", "--ideal", "x1^2 + (x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column"));
    assert_eq!(run(&["hilbert"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "p", "12", "hilbert", "--ci", "2", "2", "2"]).status.code(), Some(2));
    assert_eq!(run(&["conic-test", "--ci", "2", "2", "2", "--conic", "x1"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_main_theorem_suite() {
    let o = run(&["verify", "--suite", "theorem-main-ci"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("suite theorem-main-ci: 24/24 passed"), "{text}");
    assert!(!text.contains("FAIL"));
}
