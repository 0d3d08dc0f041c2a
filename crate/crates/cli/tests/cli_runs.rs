use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthofarkas")).args(args).output().unwrap()
}

#[test]
fn parallel_strata_do_not_change_output() {
    for (sub, file) in [
        ("dominance", "dominance_certificate.json"),
        ("inhomogeneous", "inhomogeneous_witness.json"),
        ("matrix", "matrix_certificate.json"),
        ("interval", "interval_holds.json"),
        ("complex-search", "complex_search_certificate.json"),
    ] {
        let path = fixture(file);
        let path = path.to_str().unwrap();
        let seq = run(&[sub, path]);
        let par = run(&[sub, path, "--parallel"]);
        assert_eq!(seq.stdout, par.stdout, "{file}");
        assert_eq!(seq.status.code(), par.status.code());
    }
}

#[test]
fn bad_flags_and_paths_are_input_errors() {
    let path = fixture("complex_verify_valid.json");
    let path = path.to_str().unwrap();
    assert_eq!(run(&["complex-verify", path, "--precision", "0"]).status.code(), Some(2));
    assert_eq!(run(&["complex-verify", path, "--precision", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["complex-search", path, "--sides", "5"]).status.code(), Some(2));
    assert_eq!(run(&["dominance", "/nonexistent/instance.json"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-subcommand"]).status.code(), Some(2));
}

#[test]
fn orthant_budget_exhaustion_is_undecided() {
    let path = fixture("interval_holds.json");
    let out = run(&["interval", path.to_str().unwrap(), "--orthant-budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["result"], "undecided");
    assert_eq!(doc["verified"], false);
}

#[test]
fn result_keys_come_in_document_order() {
    let out = run(&["oracle", fixture("oracle_holds.json").to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("result") < pos("body") && pos("body") < pos("verified") && pos("verified") < pos("engine_version"));
}
