//! End-to-end checks of the batch front end: JSON in, JSON report out,
//! exit status 0 exactly when the requested checks pass.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn write_input(dir: &std::path::Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).expect("write test input");
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_faceideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is a JSON report")
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("faceideal-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("create temp dir");
    dir
}

#[test]
fn face_ideal_and_betti_on_two_points() {
    let dir = tempdir();
    let complex = write_input(
        &dir,
        "two_points.json",
        r#"{"vertices": ["x1", "x2"], "facets": [["x1"], ["x2"]]}"#,
    );
    let path = complex.to_str().unwrap();

    let out = run(&["face-ideal", path, "--pretty"]);
    assert!(out.status.success());
    let rep = report(&out);
    assert_eq!(
        rep["ideal"],
        serde_json::json!(["x1*y2", "x2*y1", "y1*y2"])
    );

    let out = run(&["betti", path, "--oracle"]);
    assert!(out.status.success());
    let rep = report(&out);
    assert_eq!(rep["table"]["total"], serde_json::json!([3, 2]));
    assert_eq!(rep["table"]["projdim"], serde_json::json!(1));
    assert_eq!(rep["oracle"]["agrees"], serde_json::json!(true));
}

#[test]
fn verify_subcommands_pass_on_small_inputs() {
    let dir = tempdir();
    let complex = write_input(
        &dir,
        "path3.json",
        r#"{"vertices": ["x1","x2","x3"], "facets": [["x1","x2"],["x2","x3"]]}"#,
    );
    let poset = write_input(
        &dir,
        "chain3.json",
        r#"{"elements": ["p1","p2","p3"], "relations": [["p1","p2"],["p2","p3"]]}"#,
    );
    let cpath = complex.to_str().unwrap();
    let ppath = poset.to_str().unwrap();

    for args in [
        vec!["verify", "duality", cpath],
        vec!["verify", "resolution", cpath],
        vec!["verify", "quotients", cpath],
        vec!["verify", "chain-theorem", ppath],
        vec!["verify", "generalized", cpath, "--k", "2,1,1", "--d", "1,1,1"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "failed: {args:?}\n{}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(report(&out)["pass"], serde_json::json!(true));
    }

    let out = run(&["poset", "dilworth", ppath]);
    assert!(out.status.success());
    assert_eq!(report(&out)["dilworth"], serde_json::json!(1));
}

#[test]
fn shelling_accepts_and_rejects_with_witness() {
    let dir = tempdir();
    let complex = write_input(
        &dir,
        "mixed.json",
        r#"{"vertices": ["x1","x2","x3"], "facets": [["x1","x3"],["x2"]]}"#,
    );
    let good = write_input(&dir, "order_good.json", r#"[["x1","x3"],["x2"]]"#);
    let bad = write_input(&dir, "order_bad.json", r#"[["x2"],["x1","x3"]]"#);

    let out = run(&["shelling", complex.to_str().unwrap(), "--order", good.to_str().unwrap()]);
    assert!(out.status.success());

    let out = run(&["shelling", complex.to_str().unwrap(), "--order", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    let rep = report(&out);
    assert_eq!(rep["accepted"], serde_json::json!(false));
    assert!(rep["witness"].is_object(), "failed check carries a witness");
}

#[test]
fn malformed_input_gives_diagnostic_and_nonzero_exit() {
    let dir = tempdir();
    let bad = write_input(&dir, "bad.json", r#"{"vertices": ["x1"], "facets": [["zz"]]}"#);
    let out = run(&["face-ideal", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("zz"), "diagnostic names the unknown label: {stderr}");
}
