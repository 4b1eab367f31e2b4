//! End-to-end runs of the `peiffer` binary on the fixture documents.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn peiffer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peiffer"))
        .args(args)
        .env_remove("PEIFFER_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn on(task: &str, file: &str, extra: &[&str]) -> Output {
    let path = fixture(file);
    let mut args = vec![task, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    peiffer(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn non_central_extension_exits_one_with_witness() {
    let o = on("central", "s3_over_0.json", &[]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("verdict: false"));
    assert!(text.contains("witness nontrivial Peiffer element"));
    assert!(text.contains("obstruction: order 3 (Z/3)"));
}

#[test]
fn identity_conjugation_is_crossed() {
    let o = on("crossed", "id_conj.json", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("verdict: true"));
}

#[test]
fn text_reports_list_members_only_with_witness_flag() {
    let plain = stdout(&on("peiffer", "s3_over_0.json", &["--no-timing"]));
    assert!(plain.contains("peiffer commutator: order 3 (Z/3)"));
    assert!(!plain.contains("members"));
    let full = stdout(&on("peiffer", "s3_over_0.json", &["--no-timing", "--witness"]));
    assert!(full.contains("members: 0 2 5"));
}

#[test]
fn computed_values_from_fixtures() {
    let order_of = |task: &str, file: &str, name: &str| -> u64 {
        let o = on(task, file, &["--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{task}: {}", stderr(&o));
        let report = json(&o);
        report["objects"]
            .as_array()
            .unwrap()
            .iter()
            .find(|s| s["name"] == name)
            .unwrap_or_else(|| panic!("{task} reports {name}"))["order"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(order_of("centralize", "s3_over_0.json", "centralization"), 2);
    assert_eq!(order_of("reflect", "s3_over_0.json", "crossed reflection"), 2);
    assert_eq!(order_of("double-centralize", "s3_over_0.json", "J"), 3);
    assert_eq!(order_of("hopf3", "s3_over_0.json", "quotient"), 1);
    assert_eq!(order_of("hopf2", "z4.json", "quotient"), 1);
    assert_eq!(order_of("galois-group", "z4.json", "quotient"), 1);
    assert_eq!(order_of("double", "klein.json", "pullback"), 4);
    assert_eq!(order_of("peiffer", "lie_r2.json", "peiffer commutator"), 3);
}

#[test]
fn verdicts_and_exit_codes() {
    let cases = [
        ("trivial", "z4.json", 0),
        ("five-term", "z4.json", 0),
        ("double-central", "klein.json", 0),
        ("double-central", "s3_over_0.json", 1),
        ("central", "lie_r2.json", 1),
        ("central-crosscheck", "lie_r2.json", 0),
        ("central-crosscheck", "s3_over_0.json", 0),
        ("validate", "klein.json", 0),
    ];
    for (task, file, code) in cases {
        let o = on(task, file, &[]);
        assert_eq!(o.status.code(), Some(code), "{task} {file}: {}{}", stdout(&o), stderr(&o));
    }
}

#[test]
fn five_term_marks_first_nodes_unchecked() {
    let text = stdout(&on("five-term", "z4.json", &[]));
    assert!(text.contains("exactness at node 1: not checked (projectivity required)"));
    assert!(text.contains("exactness at node 2: not checked (projectivity required)"));
    for node in 3..=5 {
        assert!(text.contains(&format!("exactness at node {node}: exact")));
    }
    assert!(text.contains("caveat projectivity_not_verified: true"));
}

#[test]
fn invalid_input_exits_two_with_location() {
    let o = on("validate", "bad_action.json", &[]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("actions[0] (wrong)"), "{err}");

    let o = on("central", "id_conj.json", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("document task is 'crossed'"));

    let o = peiffer(&["central", "--input", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));

    let o = peiffer(&["verify", "--property", "no-such-property"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no-such-property"));
}

#[test]
fn undeclared_names_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("forward.json");
    std::fs::write(
        &path,
        r#"{"objects": [{"name": "G", "cyclic": 2}],
            "pxmods": [
              {"name": "Q", "kind": "quotient", "of": "P", "by": [1]},
              {"name": "P", "kind": "identity_conjugation", "object": "G"}
            ]}"#,
    )
    .unwrap();
    let o = peiffer(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown pxmod 'P'"), "{}", stderr(&o));
}

#[test]
fn order_cap_from_flag_and_environment() {
    let o = on("central", "s3_over_0.json", &["--max-order", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"), "{}", stderr(&o));

    let path = fixture("s3_over_0.json");
    let o = Command::new(env!("CARGO_BIN_EXE_peiffer"))
        .args(["central", "--input", path.to_str().unwrap()])
        .env("PEIFFER_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));

    let o = Command::new(env!("CARGO_BIN_EXE_peiffer"))
        .args(["crossed", "--input", fixture("id_conj.json").to_str().unwrap()])
        .env("PEIFFER_MAX_ORDER", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_stable_without_timing() {
    let args = ["--format", "json", "--no-timing", "--witness"];
    let a = on("double-centralize", "s3_over_0.json", &args);
    let b = on("double-centralize", "s3_over_0.json", &args);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("elapsed_ms").is_none());

    let timed = json(&on("double-centralize", "s3_over_0.json", &["--format", "json"]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = on("crossed", "id_conj.json", &["--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["task"], "crossed");
    assert_eq!(report["verdict"], true);
}

#[test]
fn verify_reports_zero_failures() {
    let o = peiffer(&["verify", "--property", "main-theorem-equivalence", "--max-order", "48"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("property main-theorem-equivalence (group, bound 48"));
    assert!(text.contains("failures: 0"));
}

#[test]
fn verify_all_theories_merges_reports() {
    let o = peiffer(&[
        "verify",
        "--theory",
        "all",
        "--property",
        "crossed-iff-trivial-peiffer",
        "--bound",
        "16",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = json(&o);
    let props = report["properties"].as_array().unwrap();
    let theories: Vec<&str> = props.iter().map(|p| p["theory"].as_str().unwrap()).collect();
    assert_eq!(theories, ["group", "lie"]);
}

#[test]
fn enumerate_counts_small_bound() {
    let o = peiffer(&["enumerate", "--bound", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let counts = &json(&o)["counts"];
    assert_eq!(counts["bound"], 4);
    assert!(counts["pxmods"].as_u64().unwrap() > 0);
}
