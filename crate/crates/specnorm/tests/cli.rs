//! Subcommand smoke tests against the real binary: exit codes, JSON shapes,
//! file handling, and the pinned human summary of the suite.

use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn specnorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specnorm"))
        .args(args)
        .env_remove("SPECNORM_BUDGET_MS")
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn help_lists_subcommands() {
    let out = specnorm(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for cmd in ["build", "gamma", "norm", "classify", "check", "suite", "search", "make"] {
        assert!(text.contains(cmd), "help is missing {cmd}");
    }
}

#[test]
fn make_chain_emits_a_space_document() {
    let out = specnorm(&["make", "chain", "--n", "3"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["name"], "chain3");
    assert_eq!(doc["points"].as_array().unwrap().len(), 3);
    assert_eq!(doc["specializations"].as_array().unwrap().len(), 2);
}

#[test]
fn make_examples_reports_documented_and_computed_norms() {
    let out = specnorm(&["make", "examples"]);
    assert!(out.status.success());
    let docs = stdout_json(&out);
    let list = docs.as_array().unwrap();
    assert_eq!(list.len(), 3);
    assert_eq!(list[1]["label"], "projection-to-line");
    assert_eq!(list[1]["documented_norm"]["numer"], 1);
    assert_eq!(list[1]["computed_norm"]["numer"], 1);
    // The contraction example documents norm 2 but every fragment-visible
    // ratio is 1; the report carries both values instead of reconciling.
    assert_eq!(list[2]["documented_norm"]["numer"], 2);
    assert_eq!(list[2]["computed_norm"]["numer"], 1);
}

#[test]
fn build_reports_structure_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diamond.json");
    let doc = specnorm(&["make", "diamond"]);
    fs::write(&path, &doc.stdout).unwrap();

    let out = specnorm(&["build", "--space", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["dimension"], 2);
    assert_eq!(report["irreducible"], true);
    assert_eq!(report["uip"]["holds"], true);
}

#[test]
fn gamma_writes_dot_and_honours_edge_mode() {
    let dir = tempfile::tempdir().unwrap();
    let space = dir.path().join("chain.json");
    fs::write(&space, specnorm(&["make", "chain", "--n", "3"]).stdout).unwrap();
    let dot = dir.path().join("chain.dot");

    let out = specnorm(&[
        "gamma",
        "--space",
        space.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    // Cover mode drops the composite a -> c edge, all mode keeps it.
    assert!(!text.contains("\"a\" -> \"c\""));

    let all = specnorm(&[
        "gamma",
        "--space",
        space.to_str().unwrap(),
        "--edges",
        "all",
        "--json",
    ]);
    assert!(all.status.success());
    let report = stdout_json(&all);
    assert_eq!(report["mode"], "all");
    assert_eq!(report["edges"].as_array().unwrap().len(), 3);
}

fn write_gap_morphism(dir: &std::path::Path) -> std::path::PathBuf {
    fs::write(
        dir.join("chain2.json"),
        specnorm(&["make", "chain", "--n", "2"]).stdout,
    )
    .unwrap();
    fs::write(
        dir.join("chain3.json"),
        specnorm(&["make", "chain", "--n", "3"]).stdout,
    )
    .unwrap();
    let morphism = dir.join("gap.json");
    fs::write(
        &morphism,
        r#"{ "source": "chain2.json", "target": "chain3.json", "map": { "a": "a", "b": "c" } }"#,
    )
    .unwrap();
    morphism
}

#[test]
fn norm_resolves_space_references_relative_to_the_morphism_file() {
    let dir = tempfile::tempdir().unwrap();
    let morphism = write_gap_morphism(dir.path());

    let out = specnorm(&["norm", "--morphism", morphism.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["norm"]["numer"], 2);
    assert_eq!(report["norm"]["denom"], 1);
    assert_eq!(report["witness"][0], "a");
    assert_eq!(report["witness"][1], "b");
}

#[test]
fn classify_reports_the_full_profile() {
    let dir = tempfile::tempdir().unwrap();
    let morphism = write_gap_morphism(dir.path());

    let out = specnorm(&["classify", "--morphism", morphism.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let profile = stdout_json(&out);
    assert_eq!(profile["injective"], true);
    assert_eq!(profile["sp_type"], true);
    assert_eq!(profile["chain_lifting"], false);
    assert_eq!(profile["longitudinal"]["length_preserving"], false);
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let morphism = write_gap_morphism(dir.path());

    let failing = specnorm(&["check", "--morphism", morphism.to_str().unwrap()]);
    assert_eq!(failing.status.code(), Some(1));
    let text = String::from_utf8(failing.stdout).unwrap();
    assert!(text.contains("T2.7"));
    assert!(text.contains("fail"));

    let chain = dir.path().join("chain3.json");
    let passing = specnorm(&["check", "--space", chain.to_str().unwrap()]);
    assert_eq!(passing.status.code(), Some(0));

    let neither = specnorm(&["check"]);
    assert_eq!(neither.status.code(), Some(2));
}

#[test]
fn suite_summary_matches_the_golden_file() {
    let out = specnorm(&[
        "suite",
        "--seed",
        "7",
        "--max-points",
        "2",
        "--random-trials",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["pass"], false);
    assert_eq!(report["non_vacuous_failures"], 1);
    let summary = String::from_utf8(out.stderr).unwrap();
    assert_eq!(summary, include_str!("golden/suite_summary.txt"));
}

#[test]
fn suite_restricted_to_functor_laws_passes() {
    let out = specnorm(&[
        "suite",
        "--statements",
        "T1.6",
        "--max-points",
        "3",
        "--random-trials",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["pass"], true);
}

#[test]
fn suite_rejects_bad_parameters() {
    let bad_statement = specnorm(&["suite", "--statements", "T9.9"]);
    assert_eq!(bad_statement.status.code(), Some(2));
    let over_cap = specnorm(&["suite", "--max-points", "6"]);
    assert_eq!(over_cap.status.code(), Some(2));
}

#[test]
fn search_finds_minimal_witnesses_and_reports_misses() {
    let found = specnorm(&["search", "--claim", "injective-norm-not-one"]);
    assert!(found.status.success());
    let witness = stdout_json(&found);
    assert_eq!(witness["total_points"], 5);
    assert_eq!(witness["norm"]["numer"], 2);

    let missed = specnorm(&["search", "--claim", "injective-norm-not-one", "--max-points", "4"]);
    assert_eq!(missed.status.code(), Some(2));

    let unknown = specnorm(&["search", "--claim", "never-heard-of-it"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn wall_clock_budget_aborts_long_sweeps() {
    let out = Command::new(env!("CARGO_BIN_EXE_specnorm"))
        .args(["suite", "--max-points", "4", "--random-trials", "0"])
        .env("SPECNORM_BUDGET_MS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("budget"));
}

#[test]
fn schema_errors_carry_context_and_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{ "nom": "oops" }"#).unwrap();
    let out = specnorm(&["build", "--space", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("error:"));
    assert!(text.contains("bad.json"));
}
