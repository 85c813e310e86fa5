//! The `reebcz` binary: output, exit codes, determinism.

use std::process::{Command, Output};

fn reebcz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reebcz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cz_table_reproduces_the_example() {
    let o = reebcz(&["cz-table", "--n", "2", "--eps", "1/1000", "--n-max", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let closed: Vec<(String, String)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let c: Vec<&str> = l.split(',').collect();
            (c[0].to_string(), c[3].to_string())
        })
        .collect();
    let minus: Vec<&str> = closed.iter().filter(|r| r.0 == "minus").map(|r| r.1.as_str()).collect();
    let plus: Vec<&str> = closed.iter().filter(|r| r.0 == "plus").map(|r| r.1.as_str()).collect();
    assert_eq!(minus, ["1", "3", "5", "5", "7", "9", "9"]);
    assert_eq!(plus, ["1", "3", "3", "5", "7", "7", "9"]);
}

#[test]
fn zero_eps_is_degenerate() {
    let o = reebcz(&["cz-table", "--n", "2", "--eps", "0", "--n-max", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
}

#[test]
fn auto_eps_table() {
    let o = reebcz(&["cz-table", "--n", "4", "--eps", "auto", "--n-max", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["family"] == "minus" && r["N"] == 10 && r["mu_closed"] == 9));
}

#[test]
fn sh_ranks_examples() {
    let o = reebcz(&["sh-ranks", "--n", "2", "--degree-max", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pattern_ok"], true);
    assert_eq!(v["table"]["ranks"]["3"], 3);
    let o = reebcz(&["sh-ranks", "--n", "1", "--degree-max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let o = reebcz(&["sh-ranks", "--n", "8", "--degree-max", "41", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\n41,9,"));
}

#[test]
fn shifted_grading_breaks_the_pattern() {
    let o = reebcz(&["sh-ranks", "--n", "2", "--degree-max", "6", "--degree-shift", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lens_compare_examples() {
    let o = reebcz(&["lens-compare", "--n", "2", "--a1", "1", "--a2", "1001/1000", "--degree-max", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equal"], true);
    let o = reebcz(&["lens-compare", "--n", "3", "--degree-max", "21"]);
    assert_eq!(o.status.code(), Some(0));
    let o = reebcz(&["lens-compare", "--n", "2", "--a1", "1", "--a2", "1", "--degree-max", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let o = reebcz(&["verify", "--n", "2", "--samples", "1000", "--seed", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let checks = v["checks"].as_array().unwrap();
    let tangency = checks.iter().find(|c| c["name"] == "radial_tangency").unwrap();
    assert_eq!(tangency["asserted"], false);
    assert!(tangency["worst"].as_f64().unwrap() > 1e-3);
    let o = reebcz(&["verify", "--n", "5", "--samples", "200"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tight_tolerance_reports_a_mismatch() {
    let o = reebcz(&["verify", "--n", "2", "--samples", "50", "--tol-ode", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--n", "3", "--samples", "100", "--seed", "42", "--format", "json"];
    let a = reebcz(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_reebcz")).args(args).env("REEBCZ_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let c = reebcz(&["cz-table", "--n", "5", "--eps", "auto", "--n-max", "30", "--format", "md"]);
    let d = reebcz(&["cz-table", "--n", "5", "--eps", "auto", "--n-max", "30", "--format", "md"]);
    assert_eq!(c.stdout, d.stdout);
}
