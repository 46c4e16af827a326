use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn k3fib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3fib")).args(args).output().unwrap()
}

fn check(name: &str, extra: &[&str]) -> Output {
    let path = data(name);
    let mut args = vec!["check", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    k3fib(&args)
}

#[test]
fn text_report_shows_the_hilbert_row() {
    let out = check("fermat.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1 3 6 11 18 27 38"));
    assert!(text.contains("verdict: admissible"));
}

#[test]
fn exit_codes() {
    assert_eq!(check("malformed.json", &[]).status.code(), Some(2));
    assert_eq!(check("cone_vanishing.json", &[]).status.code(), Some(2));
    assert_eq!(check("unigonal_r2.json", &["--inject-torsion-fault"]).status.code(), Some(3));
    assert_eq!(check("missing.json", &[]).status.code(), Some(4));
    assert_eq!(check("fermat.json", &["--out", "/nonexistent/dir/report.json"]).status.code(), Some(4));
    assert_eq!(check("fermat.json", &["--torsion-degrees", "1,2"]).status.code(), Some(2));
}

#[test]
fn options_reach_the_report() {
    let dir = std::env::temp_dir().join(format!("k3fib-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let out = check(
        "unigonal_r1.json",
        &["--format", "json", "--max-degree", "8", "--samples", "-1,1/3", "--torsion-degrees", "6,7", "--out", out_path.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["config"]["samples"], serde_json::json!(["-1", "1/3"]));
    assert_eq!(v["config"]["max_check_degree"], 8);
    assert_eq!(v["hilbert"]["generic"].as_array().unwrap().len(), 9);
    assert_eq!(v["torsion"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn truncation_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_k3fib"))
        .args(["check", data("unigonal_r3.json").to_str().unwrap(), "--format", "json"])
        .env("K3FIB_TRUNCATION", "20")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["truncation"], 20);
    assert_eq!(v["admissibility"]["singularity_types"][0]["computed_type"], "A_2");
    let bad = Command::new(env!("CARGO_BIN_EXE_k3fib"))
        .args(["check", data("fermat.json").to_str().unwrap()])
        .env("K3FIB_TRUNCATION", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
