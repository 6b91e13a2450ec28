use std::process::{Command, Output};

use serde_json::Value;

fn qcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcube")).args(args).env_remove("QCUBE_CAP").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn spectrum_pairs_and_charpoly() {
    let out = qcube(&["spectrum", "--q", "2", "--n", "3", "--verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let pairs: Vec<(String, String)> = v["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p["lambda"].as_str().unwrap().to_string(), p["mult"].as_str().unwrap().to_string()))
        .collect();
    let expect = [("7", "1"), ("2", "7"), ("-2", "7"), ("-7", "1")];
    assert_eq!(pairs, expect.map(|(a, b)| (a.to_string(), b.to_string())));
    assert_eq!(v["charpoly_verified"], true);
}

#[test]
fn spectrum_csv() {
    let out = qcube(&["spectrum", "--q", "3", "--n", "2", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k,lambda,mult\n0,4,1\n1,0,4\n2,-4,1\n");
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        &["spectrum", "--q", "6", "--n", "2"][..],
        &["trees", "--q", "2", "--n", "0"],
        &["trees", "--q", "1", "--n", "2"],
        &["eigenbasis", "--q", "32", "--n", "1"],
        &["eigenbasis", "--q", "2", "--n", "3", "--cap", "10"],
        &["spectrum", "--q", "2", "--n", "2", "--verify", "nope"],
        &["spectrum", "--q", "2", "--n", "2", "--format", "mm"],
        &["spectrum", "--q", "2"],
    ] {
        assert_eq!(qcube(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qcube"))
        .args(["eigenbasis", "--q", "2", "--n", "3"])
        .env("QCUBE_CAP", "15")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eigenbasis_sizes() {
    let out = qcube(&["eigenbasis", "--q", "2", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["vectors"].as_array().unwrap().len(), 1);

    let out = qcube(&["eigenbasis", "--q", "3", "--n", "2", "--verify", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vectors"].as_array().unwrap().len(), 6);
    assert_eq!(v["subspaces"].as_array().unwrap().len(), 6);
    assert!(v["checks"].as_object().unwrap().values().all(|c| c == true));
    assert_eq!(v["checks"].as_object().unwrap().len(), 8);
}

#[test]
fn configured_modulus() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "[field]\nmodulus = [1, 0, 1, 0, 0, 1]\n").unwrap();
    let out = qcube(&["eigenbasis", "--q", "32", "--n", "1", "--verify", "all", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["vectors"].as_array().unwrap().len(), 2);

    std::fs::write(&cfg, "[field]\nmodulus = [1, 1, 1, 1, 1, 1]\n").unwrap();
    let out = qcube(&["eigenbasis", "--q", "32", "--n", "1", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trees_all_oracles() {
    let out = qcube(&["trees", "--q", "2", "--n", "2", "--oracle", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in ["formula", "minors", "enumeration"] {
        assert_eq!(v[key], "162", "{key}");
    }
    assert_eq!(v["agree"], true);

    let out = qcube(&["trees", "--q", "1", "--n", "3", "--allow-q1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hypercube"], "3072");
}

#[test]
fn matrix_market_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.mtx");
    let out = qcube(&["spectrum", "--q", "2", "--n", "2", "--format", "mm", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mm = std::fs::read_to_string(&path).unwrap();
    let mut lines = mm.lines();
    assert_eq!(lines.next(), Some("%%MatrixMarket matrix coordinate integer general"));
    assert_eq!(lines.next(), Some("5 5 12"));
    let index: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("m.mtx.index.json")).unwrap()).unwrap();
    assert_eq!(index["rows"].as_array().unwrap().len(), 5);
    assert_eq!(index["rows"][4]["subspace"]["k"], 2);

    let lap = dir.path().join("l.mtx");
    let out = qcube(&["trees", "--q", "2", "--n", "1", "--format", "mm", "--out", lap.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&lap).unwrap().contains("1 1 1\n1 2 -1\n"));
}

#[test]
fn output_is_deterministic() {
    let a = qcube(&["eigenbasis", "--q", "2", "--n", "2", "--format", "csv"]);
    let b = qcube(&["eigenbasis", "--q", "2", "--n", "2", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selftest_quick_passes() {
    let out = qcube(&["selftest", "--quick", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("selftest: all checks passed"));
    assert!(!text.contains("UNCOVERED"));
}

#[test]
fn claim_table_lists_claims() {
    let out = qcube(&["selftest", "--paper-map"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("trees-minors"));
    assert!(text.contains("acceptance criterion 7"));
}
