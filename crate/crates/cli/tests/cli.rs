//! Drives the built binary over the documented JSON formats.

use std::path::PathBuf;
use std::process::Command;

fn lattkit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lattkit"))
}

fn write(dir: &std::path::Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_accepts_and_rejects() {
    let dir = std::env::temp_dir().join("lattkit-cli-check");
    std::fs::create_dir_all(&dir).unwrap();
    let chain = write(
        &dir,
        "chain.json",
        r#"{"labels": ["0","a","1"], "covers": [["0","a"],["a","1"]]}"#,
    );
    let diamond = write(
        &dir,
        "diamond.json",
        r#"{"labels": ["0","a","b","c","1"],
            "covers": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}"#,
    );
    let out = lattkit()
        .args(["check", chain.to_str().unwrap(), "--condition", "1", "--kappa", "one"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let verdict: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(verdict["holds"], true);

    let out = lattkit()
        .args(["check", diamond.to_str().unwrap(), "--condition", "1", "--kappa", "one"])
        .output()
        .unwrap();
    let verdict: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(verdict["holds"], false);
    assert!(verdict["witness"].as_str().unwrap().contains("Ann"));

    // the dual of a chain is a chain, so the condition still holds
    let out = lattkit()
        .args(["check", chain.to_str().unwrap(), "--condition", "5", "--kappa", "all", "--dual"])
        .output()
        .unwrap();
    let verdict: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(verdict["holds"], true);
}

#[test]
fn spectrum_equiv_and_replay() {
    let dir = std::env::temp_dir().join("lattkit-cli-spectrum");
    std::fs::create_dir_all(&dir).unwrap();
    let stalk = write(
        &dir,
        "nilpotent.json",
        r#"{"labels": ["0","a","1"], "covers": [["0","a"],["a","1"]],
            "commutator": [[1,2,1],[2,2,2]]}"#,
    );
    let out = lattkit()
        .args(["spectrum", stalk.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["spec"], serde_json::json!(["a"]));

    let out = lattkit()
        .args(["equiv", stalk.to_str().unwrap()])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["blocks"][0], serde_json::json!(["0", "a"]));

    // induced commutator from a congruence, then fed back through spectrum
    let chain = write(
        &dir,
        "chain.json",
        r#"{"labels": ["0","a","1"], "covers": [["0","a"],["a","1"]]}"#,
    );
    let blocks = write(&dir, "blocks.json", r#"{"blocks": [["0","a"],["1"]]}"#);
    let out = lattkit()
        .args([
            "comm-from-cong",
            chain.to_str().unwrap(),
            "--congruence",
            blocks.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let produced: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let replay = write(&dir, "replay.json", &produced["lattice"].to_string());
    let out = lattkit()
        .args(["spectrum", replay.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn ring_bridge_and_reticulation() {
    let dir = std::env::temp_dir().join("lattkit-cli-ring");
    std::fs::create_dir_all(&dir).unwrap();
    let z6 = write(&dir, "z6.json", r#"{"type":"Zn","n":6}"#);
    let out = lattkit()
        .args(["ring", z6.to_str().unwrap(), "--bridge"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["semiprime"], true);

    let z12 = write(&dir, "z12.json", r#"{"type":"Zn","n":12}"#);
    let out = lattkit()
        .args(["ring", z12.to_str().unwrap(), "--condition", "1", "--kappa", "one"])
        .output()
        .unwrap();
    let verdict: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(verdict["holds"], false);

    let out = lattkit()
        .args(["ring", z12.to_str().unwrap(), "--reticulation"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // four radical classes: the reticulation of Z12 is the four-element square
    assert_eq!(report["reticulation"]["labels"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_suite_exit_codes() {
    let dir = std::env::temp_dir().join("lattkit-cli-enum");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("davey.json");
    let out = lattkit()
        .args([
            "enumerate",
            "--suite",
            "davey",
            "--n",
            "5",
            "--jobs",
            "2",
            "--out",
            out_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);

    // the transfer suite at six elements finds the refuted biconditionals
    // and reports a nonzero exit
    let out = lattkit()
        .args(["enumerate", "--suite", "transfer", "--n", "6"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}
