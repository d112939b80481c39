//! End-to-end tests of the command-line binary: exit codes, output formats,
//! and cross-format consistency.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectral-rank"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout should be UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process should exit normally")
}

#[test]
fn table_text_passes_and_exits_zero() {
    for id in ["1", "2", "3", "4"] {
        let out = run(&["table", id]);
        assert_eq!(exit_code(&out), 0, "table {id} stderr: {}", String::from_utf8_lossy(&out.stderr));
        let text = stdout(&out);
        assert!(text.contains("PASS"), "table {id} text missing PASS:\n{text}");
        assert!(!text.contains("FAIL"), "table {id} text contains FAIL:\n{text}");
    }
}

fn cell_value(cell: &Value) -> f64 {
    cell["value"]
        .as_str()
        .expect("value is a decimal string")
        .parse()
        .expect("value parses as f64")
}

#[test]
fn table_json_has_the_documented_shape() {
    let out = run(&["table", "1", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["table"], 1);
    assert_eq!(v["pass"], true);
    assert!(v["tool_version"].as_str().is_some_and(|s| !s.is_empty()));
    let rows = v["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 5, "orders 8 through 12");
    let first = &rows[0];
    assert_eq!(first["n"], 8);
    let cells = first["cells"].as_array().expect("cells array");
    assert_eq!(cells.len(), 2);
    for cell in cells {
        assert!(cell["pass"].as_bool().unwrap());
        assert!(cell_value(cell) > 0.0);
    }
    let f1 = cells.iter().find(|c| c["label"] == "f1").unwrap();
    assert!((cell_value(f1) - 2.7676).abs() < 5e-5);
}

#[test]
fn formats_print_identical_numeric_strings() {
    let json_out = run(&["table", "2", "--format", "json"]);
    let csv_out = run(&["table", "2", "--format", "csv"]);
    let text_out = run(&["table", "2", "--format", "text"]);
    assert_eq!(exit_code(&json_out), 0);
    assert_eq!(exit_code(&csv_out), 0);
    assert_eq!(exit_code(&text_out), 0);
    let v: Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let csv = stdout(&csv_out);
    let text = stdout(&text_out);
    let mut values_checked = 0;
    for row in v["rows"].as_array().unwrap() {
        for cell in row["cells"].as_array().unwrap() {
            let shown = cell["value"].as_str().unwrap();
            assert!(csv.contains(shown), "csv missing {shown}");
            assert!(text.contains(shown), "text missing {shown}");
            values_checked += 1;
        }
    }
    assert!(values_checked >= 20, "table 2 should have many cells");
}

#[test]
fn unreachable_tolerance_fails_with_exit_one() {
    let out = run(&["table", "1", "--tol", "1e-12"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    // Out-of-range table id (clap range check).
    assert_eq!(exit_code(&run(&["table", "9"])), 2);
    // Unknown subcommand.
    assert_eq!(exit_code(&run(&["frobnicate"])), 2);
    // Unknown verify target.
    assert_eq!(exit_code(&run(&["verify", "bogus"])), 2);
    // Malformed graph input maps to an input error.
    assert_eq!(exit_code(&run(&["query", "!!"])), 2);
    // Order too small for the extremal construction.
    assert_eq!(exit_code(&run(&["extremal", "3"])), 2);
}

#[test]
fn verify_commands_pass() {
    for (target, n_max) in [
        ("theorem1", Some("6")),
        ("theorem2", Some("6")),
        ("lemmas", Some("15")),
        ("identities", Some("20")),
    ] {
        let mut args = vec!["verify", target];
        if let Some(n) = n_max {
            args.extend_from_slice(&["--n-max", n]);
        }
        let out = run(&args);
        assert_eq!(
            exit_code(&out),
            0,
            "verify {target} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(stdout(&out).contains("PASS"));
    }
}

#[test]
fn verify_json_has_verdict_rows_and_pass() {
    let out = run(&["verify", "identities", "--n-max", "16", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "identities");
    assert_eq!(v["pass"], true);
    assert!(v["tool_version"].as_str().is_some());
    assert!(!v["rows"].as_array().unwrap().is_empty());
}

#[test]
fn query_accepts_graph6_catalog_and_family_inputs() {
    // A 5-cycle in graph6.
    let out = run(&["query", "Dhc", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row["n"], 5);
    assert_eq!(row["rank"], 5);
    assert_eq!(row["radius_agrees"], true);
    assert!((cell_value(row) - 2.0).abs() < 1e-9);

    // Catalog shorthand.
    let out = run(&["query", "K3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains('2'));

    // Family spec: first-family blow-up of total order 8.
    let out = run(&["query", "G1:1,1,1,1,4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row["n"], 8);
    assert_eq!(row["rank"], 5);
    assert!((cell_value(row) - 2.4860).abs() < 5e-5);
}

#[test]
fn extremal_reports_the_known_witness() {
    let out = run(&["extremal", "22", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = &v["rows"][0];
    assert!((cell_value(row) - 4.0).abs() < 1e-9);
    assert_eq!(row["k"], 4);
    assert_eq!(row["certified_by"], "closed_form");
    assert_eq!(row["bounds_hold"], true);
    let text_out = run(&["extremal", "5"]);
    assert_eq!(exit_code(&text_out), 0);
    // Order 5 is the cycle case.
    assert!(stdout(&text_out).to_lowercase().contains("g7"));
}
