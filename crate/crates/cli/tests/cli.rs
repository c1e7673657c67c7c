//! Subcommand behavior not already pinned by the acceptance gate.

mod common;

use std::process::Command;

use common::{catalog_dir, read_catalog};

use homly_cli::{parse_algebra, parse_candidates, parse_map};
use homly_core::algebra::algebras_equal;
use homly_core::morphism::Provenance;

fn homly(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_homly"))
        .current_dir(catalog_dir())
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(output: &std::process::Output) -> String {
    assert_eq!(output.status.code(), Some(0), "{output:?}");
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn derive_constructions_emit_parseable_documents() {
    for (construction, suite) in [
        ("prop24", "hom-triple"),
        ("cor33", "ly"),
        ("eq41", "hom-ly"),
        ("lie-ly", "ly"),
    ] {
        let derived = stdout_of(&homly(&[
            "derive",
            "so3.json",
            "--construction",
            construction,
        ]));
        let algebra = parse_algebra(&derived).unwrap();
        assert!(algebra.ternary().is_some(), "{construction}");
        let report = homly_core::suites::run_suite(
            &algebra,
            suite,
            homly_core::suites::B6Mode::Strict,
            &homly_core::report::CheckOptions::default(),
        )
        .unwrap();
        assert!(report.passed, "derive {construction} fails {suite}");
    }

    // the twisted Jacobian of a Lie bracket is the zero ternary
    let jac = stdout_of(&homly(&["derive", "so3.json", "--construction", "j-alpha"]));
    let algebra = parse_algebra(&jac).unwrap();
    assert!(algebra.binary().is_none());
    assert!(algebra.ternary().unwrap().is_zero());
}

#[test]
fn derive_rejects_non_lie_inputs() {
    let out = homly(&["derive", "octonion.json", "--construction", "lie-ly"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("hom-lie"), "{msg}");
}

#[test]
fn twist_modes_and_emitted_alpha() {
    // thm31 on an already-twisted algebra composes the twisting maps
    let twisted = stdout_of(&homly(&[
        "twist",
        "so3-homly-cyclic.json",
        "--morphism",
        "cyclic.json",
        "--mode",
        "thm31",
    ]));
    let algebra = parse_algebra(&twisted).unwrap();
    let pi = parse_map(&read_catalog("cyclic.json")).unwrap();
    assert_eq!(algebra.alpha(), &pi.compose(&pi).unwrap());

    // cor32 twists the classical algebra and records beta as the twist
    let cor32 = stdout_of(&homly(&[
        "twist",
        "so3-ly.json",
        "--morphism",
        "cyclic.json",
        "--mode",
        "cor32",
    ]));
    assert_eq!(parse_algebra(&cor32).unwrap().alpha(), &pi);

    // a non-endomorphism morphism file is an input error
    let dir = tempfile::tempdir().unwrap();
    let swap = dir.path().join("swap.json");
    std::fs::write(
        &swap,
        "{\"dim\":3,\"matrix\":[[\"0\",\"1\",\"0\"],[\"1\",\"0\",\"0\"],[\"0\",\"0\",\"1\"]]}\n",
    )
    .unwrap();
    let out = homly(&[
        "twist",
        "so3.json",
        "--morphism",
        swap.to_str().unwrap(),
        "--mode",
        "cor33",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn endos_sources_and_commute_filter() {
    let perms = stdout_of(&homly(&["endos", "so3.json", "--permutations"]));
    let kept = parse_candidates(&perms).unwrap();
    assert_eq!(kept.len(), 3);
    assert_eq!(kept.provenance(), Provenance::Permutation);

    let signed = stdout_of(&homly(&["endos", "so3.json", "--permutations", "--signed"]));
    let signed = parse_candidates(&signed).unwrap();
    assert_eq!(signed.provenance(), Provenance::SignedPermutation);
    assert!(signed.len() > 3);

    let scalars = stdout_of(&homly(&["endos", "so3.json", "--scalars", "-1,0,1,2,1/2"]));
    let scalars = parse_candidates(&scalars).unwrap();
    assert_eq!(scalars.len(), 2); // zero map and identity

    // --commute against a twisted algebra
    let commuting = stdout_of(&homly(&[
        "endos",
        "so3-homly-cyclic.json",
        "--permutations",
        "--commute",
    ]));
    let commuting = parse_candidates(&commuting).unwrap();
    assert_eq!(commuting.len(), 3); // the rotation group is abelian

    // a candidates file as the source
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cands.json");
    let doc = format!(
        "{{\"dim\":3,\"provenance\":\"user\",\"maps\":[{},{}]}}\n",
        "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]",
        "[[\"0\",\"1\",\"0\"],[\"1\",\"0\",\"0\"],[\"0\",\"0\",\"1\"]]"
    );
    std::fs::write(&file, doc).unwrap();
    let from_file = stdout_of(&homly(&[
        "endos",
        "so3.json",
        "--candidates",
        file.to_str().unwrap(),
    ]));
    assert_eq!(parse_candidates(&from_file).unwrap().len(), 1);

    // no source is a usage error (clap exits 2)
    let none = homly(&["endos", "so3.json"]);
    assert_eq!(none.status.code(), Some(2));
}

#[test]
fn random_documents_are_deterministic_and_skew_when_asked() {
    let first = stdout_of(&homly(&[
        "random",
        "--dim",
        "3",
        "--seed",
        "9",
        "--skew",
        "--ternary",
    ]));
    let second = stdout_of(&homly(&[
        "random",
        "--dim",
        "3",
        "--seed",
        "9",
        "--skew",
        "--ternary",
    ]));
    assert_eq!(first, second);
    let algebra = parse_algebra(&first).unwrap();
    assert!(algebra.binary().unwrap().is_skew());
    assert!(algebra.ternary().is_some());

    let other = stdout_of(&homly(&["random", "--dim", "3", "--seed", "10"]));
    assert!(!algebras_equal(
        &parse_algebra(&first).unwrap(),
        &parse_algebra(&other).unwrap()
    ));
}

#[test]
fn verify_all_and_truncation() {
    let all = homly(&["verify", "so3-ly.json", "--suite", "all"]);
    let text = stdout_of(&all);
    assert!(text.starts_with("suite all: PASS"));
    assert!(text.contains("ly/A1"));
    assert!(text.contains("hom-malcev/hom-malcev"));

    // truncation cap: total counterexamples exceed the listed entries
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let bent = read_catalog("so3-ly.json").replacen("\"2\": \"1\"", "\"2\": \"3\"", 1);
    std::fs::write(&bad, bent).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_homly"))
        .args([
            "verify",
            bad.to_str().unwrap(),
            "--suite",
            "ly",
            "--max-counterexamples",
            "1",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let failing = parsed["axiom_verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["passed"] == serde_json::Value::Bool(false))
        .unwrap();
    let listed = failing["counterexamples"].as_array().unwrap().len() as u64;
    let total = failing["total_counterexamples"].as_u64().unwrap();
    assert_eq!(listed, 1);
    assert!(total > listed);
}

#[test]
fn probe_rejects_non_malcev_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bent.json");
    // so3 with [e1,e2] bent to e1 + e3: skew but not Malcev
    let doc = r#"{
        "name": "bent", "dim": 3, "basis": ["e1", "e2", "e3"],
        "binary": [
            {"i": 0, "j": 1, "coeffs": {"0": "1", "2": "1"}},
            {"i": 0, "j": 2, "coeffs": {"1": "-1"}},
            {"i": 1, "j": 0, "coeffs": {"0": "-1", "2": "-1"}},
            {"i": 1, "j": 2, "coeffs": {"0": "1"}},
            {"i": 2, "j": 0, "coeffs": {"1": "1"}},
            {"i": 2, "j": 1, "coeffs": {"0": "-1"}}
        ]
    }"#;
    std::fs::write(&bad, doc).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_homly"))
        .args(["probe", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("hom-malcev"));
}
