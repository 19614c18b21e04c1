//! End-to-end tests of the `antiample` binary: exit codes, envelope
//! shape, byte-stable output, and the fan-file interface.

use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_antiample"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn fan_path(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("fans");
    path.push(name);
    path.to_str().unwrap().to_string()
}

#[test]
fn trunc_dimension_envelope() {
    let output = run(&["trunc", "--c", "2", "--p", "3", "--l", "4"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["dim"], Value::from(1));
    assert_eq!(v["subcommand"], Value::from("trunc"));
    assert_eq!(v["params"]["c"], Value::from(2));
}

#[test]
fn cartier_table_envelope() {
    let output = run(&["cartier", "--n", "1", "--p", "2"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["rows"][1]["exact_forms"], Value::from(1));
}

#[test]
fn toric_dual_ample_verdict_from_fan_file() {
    let output = run(&["toric", "--fan", &fan_path("p2.json"), "--p", "2", "--op", "bx-dual-ample"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["value"], Value::from("Ample"));
}

#[test]
fn toric_not_ample_comes_with_witness() {
    let output =
        run(&["toric", "--fan", &fan_path("hirzebruch_1.json"), "--p", "3", "--op", "bx-dual-ample"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["value"], Value::from("NotAmple"));
    assert!(v["result"]["witness"]["summand"].is_object());
}

#[test]
fn toric_validate_reports_violations_with_exit_zero() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"dim": 2, "rays": [[1,0],[1,2],[-1,-1]], "cones": [[0,1],[1,2],[2,0]]}}"#)
        .unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let output = run(&["toric", "--fan", &path, "--op", "validate"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["valid"], Value::from(false));
    assert!(!v["result"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn toric_pushforward_on_invalid_fan_is_an_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"{{"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2]]}}"#).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let output = run(&["toric", "--fan", &path, "--p", "2", "--op", "pushforward"]);
    assert_eq!(output.status.code(), Some(1));
    let v = json_of(&output);
    assert_eq!(v["diagnostics"][0]["level"], Value::from("error"));
    assert_eq!(v["result"], Value::Null);
}

#[test]
fn pn_decomposition_and_scan() {
    let output = run(&["pn", "--n", "1", "--p", "2", "--d", "0"]);
    assert!(output.status.success());
    let v = json_of(&output);
    let summands = v["result"]["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    assert_eq!(summands[0]["twist"], Value::from(-1));

    let output = run(&["pn", "--n", "1", "--p", "3", "--scan", "-2..10"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["min_nef_d"], Value::from(2));
}

#[test]
fn bott_modes() {
    let output = run(&["bott", "--n", "2", "--k", "1", "--j", "0", "--i", "1"]);
    assert!(output.status.success());
    assert_eq!(json_of(&output)["result"]["dim"], Value::from(1));

    let output = run(&["bott", "--regularity", "--n", "5", "--k", "3"]);
    assert!(output.status.success());
    assert_eq!(json_of(&output)["result"]["regular"], Value::from(true));

    let output = run(&["bott", "--wedge-range", "hypersurface", "--n", "4", "--d", "2"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["ample_lo"], Value::from(2));
    assert_eq!(v["result"]["nef_lo"], Value::from(1));

    let output = run(&["bott", "--wedge-range", "index", "--dim-x", "3", "--a", "3"]);
    assert!(output.status.success());
    assert_eq!(json_of(&output)["result"]["ample_lo"], Value::from(2));
}

#[test]
fn obstruct_ci_verdict() {
    let output = run(&["obstruct", "--ci", "3:3:5"]);
    assert!(output.status.success());
    let v = json_of(&output);
    let verdicts = v["result"]["verdicts"].as_array().unwrap();
    assert_eq!(verdicts[0]["verdict"]["value"], Value::from("NotAmple"));
    assert!(!verdicts[0]["verdict"]["trace"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_subcommand_exits_two_with_usage() {
    let output = run(&["conjecture"]);
    assert_eq!(output.status.code(), Some(2));
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(text.contains("Usage"), "{text}");
}

#[test]
fn invalid_parameters_exit_one_with_diagnostic_json() {
    let output = run(&["cartier", "--n", "0", "--p", "2"]);
    assert_eq!(output.status.code(), Some(1));
    let v = json_of(&output);
    assert_eq!(v["diagnostics"][0]["level"], Value::from("error"));
}

#[test]
fn output_bytes_are_stable_across_runs() {
    for args in [
        vec!["toric", "--fan", &fan_path("p3.json"), "--p", "3", "--op", "cokernel"],
        vec!["pn", "--n", "2", "--p", "5", "--d", "7"],
        vec!["trunc", "--c", "3", "--p", "3", "--l", "4", "--basis"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}

#[test]
fn selftest_passes_and_exits_zero() {
    let output = run(&["selftest"]);
    assert!(output.status.success());
    let v = json_of(&output);
    assert_eq!(v["result"]["failed"], Value::from(0));
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 8);
}

#[test]
fn human_rendering_is_aligned_text() {
    let output = run(&["--human", "toric", "--fan", &fan_path("p1.json"), "--p", "3", "--op", "cokernel"]);
    assert!(output.status.success());
    let text = String::from_utf8_lossy(&output.stdout);
    assert!(serde_json::from_str::<Value>(&text).is_err());
    assert!(text.contains("total multiplicity 2"), "{text}");
}
