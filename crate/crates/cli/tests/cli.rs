use std::process::{Command, Output};

use serde_json::Value;

fn gpaths(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpaths"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn map_sigma_forward() {
    let o = gpaths(&[
        "map",
        "--bijection",
        "sigma",
        "--direction",
        "fwd",
        "--input",
        "uv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ud\n");
}

#[test]
fn map_json_with_trace() {
    let o = gpaths(&[
        "map",
        "--bijection",
        "theta",
        "--direction",
        "inv",
        "--input",
        "ud",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["input"], "ud");
    assert_eq!(v["output"], "uhv");
    assert_eq!(v["trace"], serde_json::json!(["C5", "base", "base"]));
}

#[test]
fn map_text_trace() {
    let o = gpaths(&["map", "--bijection", "sigma", "--input", "huv", "--trace"]);
    assert_eq!(stdout(&o), "Hud\ntrace: C1 base\n");
}

#[test]
fn map_outside_domain_is_usage_error() {
    let o = gpaths(&["map", "--bijection", "sigma", "--input", "uvuv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("uvu"));
}

#[test]
fn table_riordan_csv() {
    let o = gpaths(&["table", "--stat", "U", "--method", "riordan", "--nmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n5,1\n25,9,1\n121,61,13,1\n");
}

#[test]
fn table_all_json_agrees() {
    let o = gpaths(&[
        "table", "--stat", "H", "--method", "all", "--nmax", "4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["agree"], true);
    let tables = v["tables"].as_array().unwrap();
    assert_eq!(tables.len(), 3);
    assert_eq!(tables[2]["method"], "formula");
    assert_eq!(
        tables[0]["rows"][4],
        serde_json::json!([304, 264, 96, 16, 1])
    );
}

#[test]
fn table_single_json_schema() {
    let o = gpaths(&[
        "table", "--stat", "V", "--method", "brute", "--nmax", "2", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"stat": "V", "method": "brute", "rows": [[1], [4, 1], [20, 8, 1]]})
    );
}

#[test]
fn table_without_route_is_usage_error() {
    let o = gpaths(&[
        "table", "--stat", "u_r", "--method", "formula", "--nmax", "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_polynomial_and_value() {
    let o = gpaths(&[
        "count", "--family", "gmotzkin", "--length", "1", "--avoid", "uvu",
    ]);
    assert_eq!(stdout(&o), "a + b\n");
    let o = gpaths(&[
        "count",
        "--family",
        "schroder",
        "--length",
        "5",
        "--weights",
        "1,1,1",
    ]);
    assert_eq!(stdout(&o), "394\n");
    let o = gpaths(&[
        "count",
        "--family",
        "dyck",
        "--length",
        "3",
        "--weights",
        "1/2,-1,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn enumerate_streams_paths() {
    let o = gpaths(&[
        "enumerate",
        "--family",
        "gmotzkin",
        "--length",
        "2",
        "--avoid",
        "uvu",
        "--no-h-on-axis",
    ]);
    let text = stdout(&o);
    let mut lines: Vec<&str> = text.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["ud", "uhv", "uuvv"]);
}

#[test]
fn size_guard_and_override() {
    let o = gpaths(&["count", "--family", "gmotzkin", "--length", "10"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gpaths(&[
        "--max-n-override",
        "3",
        "count",
        "--family",
        "dyck",
        "--length",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn series_and_riordan() {
    let o = gpaths(&["series", "--name", "s", "--order", "5"]);
    assert_eq!(stdout(&o), "1,1,3,11,45,197\n");
    let o = gpaths(&[
        "riordan",
        "--d",
        "S^2",
        "--h",
        "x*S_pow_2",
        "--nmax",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"], serde_json::json!([[1], [4, 1], [16, 8, 1]]));
}

#[test]
fn verify_bijections_passes() {
    let o = gpaths(&["verify", "--suite", "bijections", "--nmax", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS\n"));
}

#[test]
fn verify_stats_reports_counterexample() {
    let o = gpaths(&["verify", "--suite", "stats", "--nmax", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL restricted statistics"));
    assert!(text.contains("p_r at (2,0)"));
    assert!(text.ends_with("FAIL\n"));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(gpaths(&["table", "--stat", "Q"]).status.code(), Some(2));
    assert_eq!(
        gpaths(&["count", "--family", "gmotzkin", "--length", "2", "--avoid", "vv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gpaths(&["frobnicate"]).status.code(), Some(2));
}
