use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(name).display().to_string()
}

fn elnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn status_of<'a>(report: &'a Value, name: &str) -> &'a str {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .and_then(|c| c["status"].as_str())
        .unwrap()
}

#[test]
fn star_response_entry() {
    let out = elnet(&["compute", &fixture("star3"), "response"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["matrix"][0][1], "-1/2");
    assert_eq!(v["matrix"][1][0], "-1/2");
}

#[test]
fn empty_groves_single_entry() {
    let v = json(&elnet(&["compute", &fixture("empty3.json"), "groves"]));
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["partition"], "1|2|3");
    assert_eq!(entries[0]["value"], "1");
}

#[test]
fn pluecker_methods_agree_up_to_scale() {
    let a = json(&elnet(&[
        "compute",
        &fixture("star3"),
        "pluecker",
        "--method",
        "matching",
    ]));
    let b = json(&elnet(&[
        "compute",
        &fixture("star3"),
        "pluecker",
        "--method",
        "omega",
    ]));
    assert_eq!(a["normalized"], b["normalized"]);
    assert_ne!(a["coordinates"], b["coordinates"]);
}

#[test]
fn dimer_export_has_colors() {
    let v = json(&elnet(&["compute", &fixture("star3"), "dimer"]));
    assert_eq!(v["n"], 6);
    assert!(v["colors"].as_object().unwrap().len() > 6);
}

#[test]
fn triangle_kw_reports_entries() {
    let out = elnet(&["verify", &fixture("triangle3"), "--checks", "kw"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], true);
    // bridge weights 2,3,5 at k = 1,2,3
    assert!(v["checks"][0]["detail"]
        .as_str()
        .unwrap()
        .contains("x_12 = -2"));
}

#[test]
fn star_verify_all() {
    let out = elnet(&["verify", &fixture("star3")]);
    let v = json(&out);
    for name in [
        "invariants",
        "kw",
        "elcon",
        "lemmal",
        "maint",
        "lagrangian",
        "nonneg",
        "kwrep",
        "action",
        "shift",
    ] {
        assert_eq!(status_of(&v, name), "pass", "{name}");
    }
    // the pulled-back ambient form is the negative of the reduced one
    assert_eq!(status_of(&v, "vertex"), "fail");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn disconnected_boundary_skips_kwrep() {
    let out = elnet(&["verify", &fixture("empty3"), "--checks", "kwrep,lagrangian"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(status_of(&json(&out), "kwrep"), "skipped");
}

#[test]
fn corrupted_weight_is_input_error() {
    let text = std::fs::read_to_string(fixture("star3.json")).unwrap();
    let bad = text.replacen("\"weight\": \"3\"", "\"weight\": \"-3\"", 1);
    assert_ne!(bad, text);
    let path = std::env::temp_dir().join(format!("elnet-bad-{}.json", std::process::id()));
    std::fs::write(&path, bad).unwrap();
    let out = elnet(&["verify", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-positive weight"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        elnet(&["compute", "no/such/file", "response"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(elnet(&["rep", "--n", "6"]).status.code(), Some(2));
    assert_eq!(
        elnet(&["verify", &fixture("star3"), "--checks", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(elnet(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        elnet(&["apply", &fixture("star3"), "--move", "spike:9:1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn rep_catalan_and_hspace() {
    let out = elnet(&["rep", "--n", "3", "--checks", "catalan,serpent"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["checks"][0]["detail"], "dim ker Q = 5");
    let out = elnet(&["rep", "--n", "4", "--checks", "hspace"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn rep_exports() {
    let v = json(&elnet(&["rep", "--n", "3", "--export", "concordance"]));
    assert_eq!(v["partitions"].as_array().unwrap().len(), 5);
    assert_eq!(v["subsets"].as_array().unwrap().len(), 15);
    let v = json(&elnet(&["rep", "--n", "3", "--export", "structure"]));
    assert_eq!(v["form"][0][1], "1");
}

#[test]
fn gen_matches_fixtures_and_is_deterministic() {
    let star = elnet(&["gen", "star", "--n", "3", "--weights", "3,1,2"]);
    let fixture_text = std::fs::read_to_string(fixture("star3.json")).unwrap();
    assert_eq!(String::from_utf8(star.stdout).unwrap(), fixture_text);
    let a = elnet(&["gen", "moves", "--n", "4", "--seed", "7", "--moves", "6"]);
    let b = elnet(&["gen", "moves", "--n", "4", "--seed", "7", "--moves", "6"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["n"], 4);
}

#[test]
fn apply_then_compute() {
    let path = std::env::temp_dir().join(format!("elnet-bridge-{}.json", std::process::id()));
    let out = elnet(&[
        "apply",
        &fixture("empty3"),
        "--move",
        "bridge:1:5",
        "--move",
        "bridge:1:2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&elnet(&["compute", path.to_str().unwrap(), "response"]));
    std::fs::remove_file(&path).ok();
    // parallel conductances add
    assert_eq!(v["matrix"][0][1], "-7");
    assert_eq!(v["matrix"][0][0], "7");
}
