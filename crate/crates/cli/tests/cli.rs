use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tauweave"))
        .args(args)
        .env_remove("TAUWEAVE_N")
        .output()
        .expect("binary runs")
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn weak_order_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s4.json");
    assert!(
        run(&["weak-order", "--n", "3", "--out", out.to_str().unwrap()])
            .status
            .success()
    );
    let v = json(&out);
    let count: usize = v["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_array().unwrap().len())
        .sum();
    assert_eq!(count, 24);
    assert_eq!(v["edges"].as_array().unwrap().len(), 36);

    let chain = run(&["weak-order", "--n", "1", "--format", "dot"]);
    assert_eq!(
        String::from_utf8(chain.stdout)
            .unwrap()
            .matches("->")
            .count(),
        1
    );
    let hexagon = run(&["weak-order", "--n", "2", "--format", "dot"]);
    assert_eq!(
        String::from_utf8(hexagon.stdout)
            .unwrap()
            .matches("->")
            .count(),
        6
    );
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for cmd in ["weak-order", "xi", "sttilt"] {
        let a = dir.path().join(format!("{cmd}-a"));
        let b = dir.path().join(format!("{cmd}-b"));
        assert!(run(&[cmd, "--n", "3", "--out", a.to_str().unwrap()])
            .status
            .success());
        assert!(run(&[
            cmd,
            "--n",
            "3",
            "--sequential",
            "--out",
            b.to_str().unwrap()
        ])
        .status
        .success());
        assert_eq!(
            std::fs::read(&a).unwrap(),
            std::fs::read(&b).unwrap(),
            "{cmd}"
        );
    }
}

#[test]
fn xi_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("xi.json");
    assert!(run(&["xi", "--n", "2", "--out", out.to_str().unwrap()])
        .status
        .success());
    let m = json(&out)["compatible"].as_array().unwrap().clone();
    assert_eq!(m.len(), 6);
    for (k, row) in m.iter().enumerate() {
        assert_eq!(row.as_array().unwrap().len(), 6);
        assert_eq!(row[k], true);
    }
    let tsv = String::from_utf8(run(&["xi", "--n", "4", "--format", "tsv"]).stdout).unwrap();
    let rows: Vec<&str> = tsv.lines().skip(1).collect();
    assert_eq!(rows.len(), 30);
    let gs: std::collections::BTreeSet<Vec<&str>> = rows
        .iter()
        .map(|r| r.split('\t').skip(1).collect())
        .collect();
    assert_eq!(gs.len(), 30);
}

#[test]
fn sttilt_outputs() {
    let dir = tempfile::tempdir().unwrap();
    for (n, nodes) in [(1, 2), (2, 6), (3, 24)] {
        let out = dir.path().join(format!("p{n}.json"));
        assert!(run(&[
            "sttilt",
            "--n",
            &n.to_string(),
            "--out",
            out.to_str().unwrap()
        ])
        .status
        .success());
        let v = json(&out);
        assert_eq!(v["nodes"].as_array().unwrap().len(), nodes);
        let labels = v["labels"].as_array().unwrap();
        assert_eq!(labels.len(), nodes);
        assert!(labels
            .iter()
            .all(|x| x.as_array().map(|a| a.len()) == Some(n + 1)));
    }
    let dot = String::from_utf8(run(&["sttilt", "--n", "2", "--format", "dot"]).stdout).unwrap();
    assert_eq!(dot.matches("->").count(), 6);
}

#[test]
fn env_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_tauweave"))
        .args(["weak-order", "--format", "dot"])
        .env("TAUWEAVE_N", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("21"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["weak-order", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["xi", "--n", "2", "--format", "dot"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--algebra", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--algebra", "preprojective:0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sttilt", "--n", "4", "--budget-nodes", "100"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_passes_and_sabotage_fails() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let ok = run(&[
        "verify",
        "--n",
        "3",
        "--format",
        "json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(
        ok.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&ok.stderr)
    );
    let v = json(&report);
    assert_eq!(v.as_array().unwrap().len(), 9);

    let bad = run(&["verify", "--n", "2", "--sabotage"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = String::from_utf8(bad.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("FAIL [3]")));
}
