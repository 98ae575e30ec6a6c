//! End-to-end checks of the command-line surface: exit codes, canonical
//! emission, and report determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_hyperring")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/z4h.json")
}

fn tmpfile(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_fixture_succeeds() {
    let out = run(&["validate", fixture().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("strongly_distributive=false"));
}

#[test]
fn validate_rejects_corrupted_tables() {
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    doc["mul"][2][2] = serde_json::json!([1]);
    let path = tmpfile("corrupted.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("associativity"), "stderr: {err}");
    assert!(err.contains("(1,1,2)"), "stderr: {err}");
}

#[test]
fn classify_maximal_ideal_of_fixture() {
    let out = run(&["classify", fixture().to_str().unwrap(), "--ideal", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["strongly_one_abs_primary"], true);
    assert_eq!(report["prime"], true);
    assert_eq!(report["is_c_hyperideal"], false);
}

#[test]
fn classify_assert_flag_drives_exit_code() {
    let f = fixture();
    let ok = run(&["classify", f.to_str().unwrap(), "--ideal", "0,2", "--assert", "prime"]);
    assert_eq!(ok.status.code(), Some(0));
    let no = run(&["classify", f.to_str().unwrap(), "--ideal", "0", "--assert", "prime"]);
    assert_eq!(no.status.code(), Some(1));
    let bad = run(&["classify", f.to_str().unwrap(), "--ideal", "0,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn ideals_radical_colon_and_gamma() {
    let f = fixture();
    let out = run(&["ideals", f.to_str().unwrap()]);
    let rows: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let got: Vec<&str> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["ideal"].as_str().unwrap())
        .collect();
    assert_eq!(got, vec!["0", "0,2", "0,1,2,3"]);

    let out = run(&["radical", f.to_str().unwrap(), "--ideal", "0"]);
    let rep: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rep["radical"], "0,2");
    assert_eq!(rep["d_set"], "0,2");

    let out = run(&["colon", f.to_str().unwrap(), "--ideal", "0", "--by", "2"]);
    let rep: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rep["colon"], "0,2");

    let out = run(&["gamma", f.to_str().unwrap()]);
    let rep: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rep["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn template_round_trip_is_byte_identical() {
    let path = tmpfile("zn4.json");
    let out = run(&["template", "zn", "--n", "4", "--A", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();

    let check = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));

    let again = tmpfile("zn4-again.json");
    let out = run(&["template", "zn", "--n", "4", "--A", "1", "-o", again.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(first, std::fs::read_to_string(&again).unwrap());
}

#[test]
fn template_quotient_and_product() {
    let base = tmpfile("z6a.json");
    run(&["template", "zn", "--n", "6", "--A", "2,3", "-o", base.to_str().unwrap()]);
    let q = tmpfile("z6a-q.json");
    let out = run(&[
        "template",
        "quotient",
        "--input",
        base.to_str().unwrap(),
        "--ideal",
        "0,3",
        "-o",
        q.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&q).unwrap()).unwrap();
    assert_eq!(doc["n"], 3);

    let p = tmpfile("prod.json");
    let out = run(&[
        "template",
        "product",
        "--left",
        q.to_str().unwrap(),
        "--right",
        q.to_str().unwrap(),
        "-o",
        p.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(doc["n"], 9);
}

#[test]
fn theorems_subset_runs_deterministically() {
    let j1 = tmpfile("rep1.json");
    let j2 = tmpfile("rep2.json");
    let out = run(&[
        "theorems",
        "--only",
        "T5.NOPROD,T3.LOCALLEM",
        "--mode",
        "c-only",
        "--json",
        j1.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("counterexamples=0"));
    let out = run(&[
        "theorems",
        "--only",
        "T5.NOPROD,T3.LOCALLEM",
        "--mode",
        "c-only",
        "--json",
        j2.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&j1).unwrap(),
        std::fs::read_to_string(&j2).unwrap()
    );
    let rep: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&j1).unwrap()).unwrap();
    assert_eq!(rep["mode"], "c-only");
    assert!(rep["results"].as_array().unwrap().len() >= 128);
}

#[test]
fn theorems_counterexamples_exit_one() {
    // This check is refuted on rings without identities; the CLI signals
    // counterexamples through the exit code.
    let out = run(&["theorems", "--only", "T4.NOTPRIMARY", "--mode", "all"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["theorems", "--mode", "sideways"]).status.code(), Some(2));
    assert_eq!(run(&["theorems", "--only", "T9.NOPE"]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", fixture().to_str().unwrap(), "--ideal", "0,9"]).status.code(),
        Some(2)
    );
}
