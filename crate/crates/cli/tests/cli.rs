//! Black-box tests of the binary: exit codes, determinism, and the JSON
//! report round trip.

use logdiv_cli::parse::parse_rational;
use logdiv_cli::report::{Report, StageData};
use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_logdiv"))
}

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

#[test]
fn identical_config_and_seed_give_byte_identical_reports() {
    let args = ["all", "--config", &fixture("cusp.json")];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_report_round_trips() {
    let out = run(&["all", "--config", &fixture("cusp.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    // Re-serialization reproduces the exact bytes.
    assert_eq!(report.to_json(), text);
    // The rational payloads parse back to the exact expected values.
    let basis = report
        .stages
        .iter()
        .find_map(|s| match &s.data {
            StageData::Basis(b) => Some(b),
            _ => None,
        })
        .expect("basis stage present");
    let nus: Vec<_> = basis.nus.iter().map(|s| parse_rational(s).unwrap()).collect();
    assert_eq!(nus, vec![parse_rational("1/6").unwrap()]);
    assert!(basis.all_positive);
    assert_eq!(basis.germ_unit, None);
}

#[test]
fn flags_override_the_config_file() {
    let out = run(&["basis", "--config", &fixture("cusp.json"), "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.seed, 7);
    assert_eq!(report.command, "basis");
}

#[test]
fn non_homogeneous_divisors_exit_with_one() {
    let out = run(&[
        "wqh",
        "--vars",
        "x,y",
        "--f",
        "x + y^3",
        "--weights",
        "1/3,1/2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not weakly quasi-homogeneous"), "{err}");
    assert!(err.contains("3/2"), "diagnostic names the weights: {err}");
}

#[test]
fn input_problems_exit_with_two() {
    let parse = run(&["wqh", "--vars", "x,y", "--f", "x + q", "--weights", "1/3,1/2"]);
    assert_eq!(parse.status.code(), Some(2));
    let err = String::from_utf8(parse.stderr).unwrap();
    assert!(err.contains("byte 4"), "{err}");

    let missing = run(&["wqh", "--vars", "x,y", "--weights", "1/3,1/2"]);
    assert_eq!(missing.status.code(), Some(2));

    let count = run(&["wqh", "--vars", "x,y", "--f", "x*y", "--weights", "1/2"]);
    assert_eq!(count.status.code(), Some(2));

    let zero_den = run(&["wqh", "--vars", "x,y", "--f", "x*y", "--weights", "1/0,1/2"]);
    assert_eq!(zero_den.status.code(), Some(2));
}

#[test]
fn annihilator_table_for_twist_two() {
    let out = run(&["annihilator", "--config", &fixture("cusp.json"), "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let ann = report
        .stages
        .iter()
        .find_map(|s| match &s.data {
            StageData::Annihilator(a) => Some(a),
            _ => None,
        })
        .expect("annihilator stage present");
    assert_eq!(ann.tables.len(), 1);
    let table = &ann.tables[0];
    assert_eq!(table.k, 2);
    assert_eq!(table.adapted.len(), 2);
    assert!(table.adapted.iter().all(|e| e.annihilates));
    assert!(table.adapted[0].operator.contains("+ 2"), "{}", table.adapted[0].operator);
    assert!(table.from_derivations.iter().all(|e| e.annihilates));
}

#[test]
fn text_format_is_the_default_without_config() {
    let out = run(&["wqh", "--vars", "x,y", "--f", "x^3 - y^2", "--weights", "1/3,1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: wqh"), "{text}");
}

#[test]
fn unknown_config_keys_are_rejected() {
    let dir = std::env::temp_dir().join("logdiv-test-config");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"vars": ["x"], "f": "x", "weights": ["1"], "extra": 1}"#)
        .unwrap();
    let out = run(&["wqh", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_fixture_runs_the_full_pipeline_cleanly() {
    for name in ["cusp.json", "xy.json", "xyz.json", "smooth.json", "lwqh.json"] {
        let out = run(&["all", "--config", &fixture(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let report: Report = serde_json::from_slice(&out.stdout).unwrap();
        assert!(report.stages.iter().all(|s| s.status.starts_with("ok")), "{name}");
    }
}
