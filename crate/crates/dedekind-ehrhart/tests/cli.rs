//! End-to-end tests of the command-line binary: output formats, JSON/text
//! agreement, exit codes, and the resource-guard environment override.

use std::process::{Command, Output};

use dedekind_ehrhart::Rational;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dedekind-ehrhart"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn dedekind_prints_exact_values() {
    let out = run(&["dedekind", "2", "3", "--method", "fast"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1/18\n");

    let out = run(&["dedekind", "1", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");

    let out = run(&["dedekind", "2", "3", "--method", "sawtooth"]);
    assert_eq!(stdout(&out), "-1/18\n");
}

#[test]
fn dedekind_cotangent_prints_decimal() {
    let out = run(&["dedekind", "2", "3", "--method", "cotangent"]);
    assert!(out.status.success());
    let value: f64 = stdout(&out).trim().parse().unwrap();
    assert!((value + 1.0 / 18.0).abs() < 1e-9);
}

#[test]
fn dedekind_rejects_noncoprime_input() {
    let out = run(&["dedekind", "4", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gcd(4,6) = 2"), "{}", stderr(&out));
}

#[test]
fn dedekind_handles_huge_inputs() {
    let a = "9".repeat(200);
    let b = format!("{}8", "9".repeat(199)); // 10^200 - 2, coprime to 10^200 - 1
    let out = run(&["dedekind", &a, &b]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains('/'));
}

#[test]
fn reciprocity_text_reports_both_sides() {
    let out = run(&["reciprocity", "2", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lhs    = -1/18"));
    assert!(text.contains("rhs    = -1/18"));
    assert!(text.contains("reciprocity HOLDS"));
}

#[test]
fn reciprocity_json_round_trips() {
    let out = run(&["reciprocity", "5", "7", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["holds"], serde_json::Value::Bool(true));
    assert_eq!(value["s_ab"], "-1/14");
    for field in ["s_ab", "s_ba", "lhs", "rhs"] {
        let text = value[field].as_str().unwrap();
        let parsed: Rational = text.parse().unwrap();
        // Canonical form round-trips to the identical string.
        assert_eq!(parsed.to_string(), text);
    }
}

#[test]
fn text_and_json_agree_on_values() {
    let text = stdout(&run(&["dedekind", "5", "7"]));
    let json_out = stdout(&run(&["dedekind", "5", "7", "--json"]));
    let value: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    assert_eq!(value["value"].as_str().unwrap(), text.trim());

    let text = stdout(&run(&["decompose", "2", "3"]));
    let json_out = stdout(&run(&["decompose", "2", "3", "--json"]));
    let value: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    for (key, expect) in [
        ("contrib_a", "2/9"),
        ("contrib_b", "1/8"),
        ("contrib_triple", "47/72"),
        ("total", "1"),
    ] {
        assert_eq!(value[key].as_str().unwrap(), expect);
        assert!(text.contains(expect));
    }
}

#[test]
fn ehrhart_prints_polynomial_and_counts() {
    let out = run(&["ehrhart", "2", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3t^2 + 3t + 1\n");

    let out = run(&["ehrhart", "2", "3", "--count", "1"]);
    assert_eq!(stdout(&out), "7\n");

    let out = run(&["ehrhart", "2", "3", "--coeff", "1"]);
    assert_eq!(stdout(&out), "3\n");

    let out = run(&["ehrhart", "1", "1", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["coefficients"][1], "3/2");
    assert_eq!(value["coefficients"][2], "1/2");
}

#[test]
fn ehrhart_laurent_coefficient_output() {
    let out = run(&["ehrhart", "2", "3", "--laurent", "--coeff", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with("1.000000000 (im "),
        "unexpected output: {text}"
    );

    let out = run(&["ehrhart", "2", "3", "--laurent", "--coeff", "2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let re = value["re"].as_f64().unwrap();
    let im = value["im"].as_f64().unwrap();
    assert!((re - 3.0).abs() < 1e-9);
    assert!(im.abs() < 1e-9);
}

#[test]
fn ehrhart_validates_input_and_guards_resources() {
    let out = run(&["ehrhart", "4", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gcd(4,6) = 2"));

    let out = run(&["ehrhart", "2", "3", "--count", "999999999"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("instance too large"));

    let out = run(&["ehrhart", "2", "3", "--coeff", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_limit_env_var_overrides_guard() {
    // t^2 * p / 2! = 4 * 6 / 2 = 12 exceeds a ceiling of 10.
    let out = bin()
        .args(["ehrhart", "2", "3", "--count", "2"])
        .env("EHRHART_ENUM_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = bin()
        .args(["ehrhart", "2", "3", "--count", "2"])
        .env("EHRHART_ENUM_LIMIT", "1e6")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "19\n");

    let out = bin()
        .args(["ehrhart", "2", "3"])
        .env("EHRHART_ENUM_LIMIT", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_prints_deterministic_csv() {
    let out = run(&["sweep", "1..3", "1..3"]);
    assert!(out.status.success());
    let expected = "\
a,b,s_ab,s_ba,lhs,rhs,holds
1,1,0,0,0,0,true
1,2,0,0,0,0,true
1,3,1/18,0,1/18,1/18,true
2,1,0,0,0,0,true
2,3,-1/18,0,-1/18,-1/18,true
3,1,0,1/18,1/18,1/18,true
3,2,0,-1/18,-1/18,-1/18,true
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn sweep_empty_range_gives_header_only() {
    let out = run(&["sweep", "5..4", "1..3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "a,b,s_ab,s_ba,lhs,rhs,holds\n");
}

#[test]
fn sweep_writes_file_and_reports_io_failures() {
    let path = std::env::temp_dir().join(format!("sweep-test-{}.csv", std::process::id()));
    let out = run(&["sweep", "1..3", "1..3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.starts_with("a,b,s_ab,s_ba,lhs,rhs,holds\n"));
    assert_eq!(contents.lines().count(), 8);
    std::fs::remove_file(&path).ok();

    let out = run(&[
        "sweep",
        "1..3",
        "1..3",
        "--out",
        "/nonexistent-directory/r.csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn sweep_json_array() {
    let out = run(&["sweep", "1..3", "1..3", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["holds"] == true));
    assert_eq!(rows[4]["a"], "2");
    assert_eq!(rows[4]["b"], "3");
    assert_eq!(rows[4]["lhs"], "-1/18");
}

#[test]
fn malformed_ranges_are_input_errors() {
    let out = run(&["sweep", "13", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["sweep", "0..3", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["sweep", "a..b", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
}
