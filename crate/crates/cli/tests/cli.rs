//! End-to-end tests of the binary: golden files over the worked examples,
//! exit codes, and JSON losslessness.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnor-jump"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("golden {name}: {e}"))
}

#[test]
fn analyze_cusp_quartic_text() {
    assert_eq!(stdout(&["analyze", "x^4 - y^3"]), golden("analyze_x4_y3.txt"));
}

#[test]
fn analyze_cusp_quartic_json() {
    assert_eq!(
        stdout(&["analyze", "x^4 - y^3", "--json"]),
        golden("analyze_x4_y3.json")
    );
}

#[test]
fn analyze_homogeneous_quartic_json() {
    let out = stdout(&["analyze", "x^4 - y^4", "--json"]);
    assert_eq!(out, golden("analyze_x4_y4.json"));
    let record: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(record["mu"]["mu"], 9);
    assert_eq!(record["jump"]["lambda_prime"], 3);
    assert_eq!(record["jump"]["witness"], "x^3");
    assert_eq!(record["branches"], 4);
}

#[test]
fn jump_homogeneous_quartic_text() {
    assert_eq!(stdout(&["jump", "x^4 - y^4"]), golden("jump_x4_y4.txt"));
}

#[test]
fn jump_multi_slope_product_text() {
    assert_eq!(
        stdout(&["jump", "(x^8 - y^6)(x^3 - y^2)"]),
        golden("jump_product.txt")
    );
}

#[test]
fn deform_quartic_family() {
    let args = ["deform", "x^4 - y^4", "x^4 - (y^2 + s*x)^2"];
    assert_eq!(stdout(&args), golden("deform_quartic.txt"));
    let json = stdout(&["deform", "x^4 - y^4", "x^4 - (y^2 + s*x)^2", "--json"]);
    assert_eq!(json, golden("deform_quartic.json"));
    let record: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(record["jump"], 2);
    assert_eq!(record["mu_base"], 9);
}

#[test]
fn conjecture_with_verification() {
    assert_eq!(
        stdout(&["conjecture", "8", "4", "--verify"]),
        golden("conjecture_8_4.txt")
    );
}

#[test]
fn conjecture_grid_table() {
    assert_eq!(
        stdout(&["conjecture-grid", "--max", "5"]),
        golden("conjecture_grid_5.txt")
    );
}

#[test]
fn milnor_values() {
    assert_eq!(stdout(&["milnor", "x^2 + y^2"]), "mu: 1 (stabilized at N = 2)\n");
    let json = stdout(&["milnor", "x^4 - y^3", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(record["mu"], 6);
    assert_eq!(record["status"], "ok");
}

#[test]
fn substitution_flag_specializes_families() {
    let out = stdout(&["analyze", "x^4 - (y^2 + s*x)^2", "--s", "1"]);
    assert!(out.contains("germ: x^4 - y^4 - 2*x*y^2 - x^2"));
    assert!(out.contains("degenerate path: mu = 7, nu = 3"));
    assert!(out.contains("lambda': 4"));
    // without the flag, a family is rejected as input
    assert_eq!(exit_code(&["analyze", "x^4 - (y^2 + s*x)^2"]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["analyze", "x^4 - y^3"]), 0);
    assert_eq!(exit_code(&["analyze", "x^(-1)"]), 1);
    assert_eq!(exit_code(&["analyze", "x^2*y"]), 2); // not isolated
    assert_eq!(exit_code(&["jump", "x^2*y + y^3"]), 3); // not convenient
    assert_eq!(exit_code(&["jump", "x + y^2"]), 4); // smooth
    assert_eq!(exit_code(&["jump", "x^2*y + y^3", "--stabilize"]), 0);
    assert_eq!(exit_code(&["milnor", "0"]), 1);
    assert_eq!(exit_code(&["milnor", "x^4 - y^4", "--cap", "3"]), 2); // starved cap
    assert_eq!(exit_code(&["deform", "x^4 - y^4", "x^4 - y^4 + s*0"]), 1);
    assert_eq!(exit_code(&["nonsense-command"]), 1);
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn svg_figure_is_written() {
    let dir = std::env::temp_dir().join("milnor-jump-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("figure.svg");
    let _ = std::fs::remove_file(&file);
    let out = stdout(&[
        "analyze",
        "x^4 - y^3",
        "--svg",
        file.to_str().unwrap(),
    ]);
    assert!(out.contains("figure written to"));
    let svg = std::fs::read_to_string(&file).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("polyline"));
    assert!(svg.contains(">x</text>"));
    assert!(svg.contains(">y</text>"));
    assert_eq!(svg, golden("figure_x4_y3.svg"));
}

#[test]
fn json_output_round_trips_losslessly() {
    for args in [
        vec!["analyze", "x^4 - y^3", "--json"],
        vec!["analyze", "x^4 - (y^2 + s*x)^2", "--s", "1", "--json"],
        vec!["jump", "(x^8 - y^6)(x^3 - y^2)", "--json"],
        vec!["conjecture", "12", "8", "--verify", "--json"],
        vec!["conjecture-grid", "--max", "4", "--json"],
    ] {
        let out = stdout(&args);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        let re_serialized = serde_json::to_string(&value).unwrap();
        let re_parsed: serde_json::Value = serde_json::from_str(&re_serialized).unwrap();
        assert_eq!(value, re_parsed, "{args:?}");
    }
}

#[test]
fn deterministic_output() {
    let args = ["analyze", "(x^8 - y^6)(x^3 - y^2)", "--json"];
    let first = stdout(&args);
    let second = stdout(&args);
    assert_eq!(first, second);
    let record: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(record["jump"]["lambda_prime"], 2);
    assert_eq!(record["nu"], 68);
    assert_eq!(record["branches"], 3);
}

#[test]
fn stabilize_keeps_invariants() {
    // y(x^2 + y^2) has mu = 4; the stabilized representative agrees
    let json = stdout(&["analyze", "x^2*y + y^3", "--stabilize", "--json"]);
    let record: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(record["mu"]["mu"], 4);
    assert_eq!(record["nu"], 4);
    assert_eq!(record["stabilized"], "appended x^6");
    assert_eq!(record["convenient"], true);
}
