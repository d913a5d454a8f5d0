use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degenkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["check", "catalog:J3@3", "--variety", "jordan"]).status.code(), Some(0));
    let fail = run(&["check", "catalog:J3@3", "--variety", "lie"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("anticommutativity at [1, 2]"));
    assert_eq!(run(&["check", "missing.json", "--variety", "lie"]).status.code(), Some(2));
    assert_eq!(run(&["check", "catalog:J3@3", "--variety", "alternative"]).status.code(), Some(2));
    assert_eq!(run(&["check", "catalog:J3@1", "--variety", "jordan"]).status.code(), Some(2));
}

#[test]
fn algebra_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let lie = write(
        dir.path(),
        "p3.json",
        r#"{"dim": 3, "symmetry": "anticommutative",
            "products": [{"i": 1, "j": 2, "k": 2, "c": "1"}, {"i": 1, "j": 3, "k": 3, "c": "1"}]}"#,
    );
    assert_eq!(run(&["check", &lie, "--variety", "lie"]).status.code(), Some(0));
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"dim": 2, "products": [{"i": 3, "j": 1, "k": 1, "c": "1"}]}"#,
    );
    assert_eq!(run(&["check", &bad, "--variety", "lie"]).status.code(), Some(2));
    let gaussian = write(
        dir.path(),
        "qi.json",
        r#"{"dim": 2, "field": "Qi", "products": [{"i": 1, "j": 1, "k": 2, "c": "i"}]}"#,
    );
    assert_eq!(run(&["check", &gaussian, "--variety", "commutative"]).status.code(), Some(0));
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&[
            "--json",
            p.to_str().unwrap(),
            "verify-paper",
            "--suite",
            "properties",
            "--n-min",
            "3",
            "--n-max",
            "4",
            "--seed",
            "5",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let (ta, tb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_str(&ta).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["seed"], 5);
}

#[test]
fn invariants_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("inv.json");
    let o = run(&["--json", out.to_str().unwrap(), "invariants", "catalog:n3@3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["dim_der"], 6);
    assert_eq!(v["nilpotent"], true);
}

#[test]
fn emitted_witness_round_trips_through_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let w = run(&["catalog", "witness", "W9", "--n", "5", "--param", "blocks=2;1;1"]);
    assert_eq!(w.status.code(), Some(0));
    let wpath = write(dir.path(), "w9.json", &stdout(&w));
    let v: serde_json::Value = serde_json::from_str(&stdout(&w)).unwrap();
    let source = v["source"].as_str().unwrap().to_string();
    let target = v["target"].as_str().unwrap().to_string();

    let src = run(&["catalog", "emit", "jblock", "--n", "5", "--param", "blocks=2;1;1"]);
    assert_eq!(src.status.code(), Some(0));
    let spath = write(dir.path(), "source.json", &stdout(&src));

    let ok = run(&["degenerate", &spath, "--witness", &wpath, "--target", &target]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("limit equals target: true"));
    assert_eq!(run(&["degenerate", &source, "--witness", &wpath]).status.code(), Some(0));

    let wrong = run(&["degenerate", &source, "--witness", &wpath, "--target", "catalog:a@5"]);
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn literal_companion_reading_reports_a_pole() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(
        dir.path(),
        "literal.json",
        r#"{"dim": 5, "kind": "g", "entries": [
            {"row": 1, "col": 1, "value": "t^-1"}, {"row": 2, "col": 2, "value": "t^-1"},
            {"row": 3, "col": 3, "value": "t^-2"}, {"row": 4, "col": 4, "value": "t^-2"},
            {"row": 5, "col": 5, "value": "1"}]}"#,
    );
    let o = run(&[
        "degenerate",
        "catalog:lie_companion@5",
        "--witness",
        &w,
        "--target",
        "catalog:n52@5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(1,5,4)") || stdout(&o).contains("(1, 5, 4)"), "{}", stdout(&o));
}

#[test]
fn catalog_witness_reference() {
    let o = run(&["degenerate", "catalog:J1@4", "--witness", "catalog:D1@4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["degenerate", "catalog:A5(alpha=i)@3", "--witness", "catalog:D10(alpha=i)@3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn pierce_and_separate() {
    let o = run(&["pierce", "catalog:nu(alpha=1/2)@4", "--idempotent", "1,0,0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["pierce", "catalog:A2@3", "--idempotent", "1,0,0", "--kind", "associative"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("A_11"));
    let o = run(&["pierce", "catalog:J3@3", "--idempotent", "1,0,0"]);
    assert_eq!(o.status.code(), Some(2), "e1 is not idempotent in J3");

    let o = run(&["separate", "catalog:J1@3", "catalog:J3@3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nilpotency_closure"));
    let o = run(&["separate", "catalog:r2a@3", "catalog:n3@3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no obstruction found"));
}

#[test]
fn catalog_listing_and_errors() {
    let o = run(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    for name in ["J3", "n51", "g1", "A6", "W12", "D12"] {
        assert!(stdout(&o).contains(name), "{name}");
    }
    assert_eq!(run(&["catalog", "emit", "nosuch", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["catalog", "emit", "A5", "--n", "3", "--param", "alpha=1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["catalog", "witness", "W3", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn verify_paper_suites() {
    let o = run(&["verify-paper", "--suite", "jordan2", "--n-min", "3", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().skip(1).all(|l| l.starts_with("PASS")));
    assert_eq!(run(&["verify-paper", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify-paper", "--suite", "level1", "--n-min", "5", "--n-max", "4"]).status.code(),
        Some(2)
    );
}
