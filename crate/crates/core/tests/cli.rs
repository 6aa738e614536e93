use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rankone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankone")).args(args).output().expect("binary runs")
}

fn write_example(dir: &Path, file: &str, args: &[&str]) -> String {
    let path = dir.join(file).to_string_lossy().into_owned();
    let mut all = vec!["example"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path]);
    let out = rankone(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn smash_analysis_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "smash.json", &["smash", "--n", "2"]);
    let out = rankone(&["validate", &path]);
    assert_eq!(out.status.code(), Some(0));
    let out = rankone(&["analyze", &path, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["higmanImageDim"], 1);
    assert_eq!(v["casimirIsZero"], true);
    assert_eq!(v["cartan"], serde_json::json!([[1, 1], [1, 1]]));
    assert_eq!(v["verdict"]["global"], "consistent-with-theorem");
    assert!(v["identityChecks"].as_object().unwrap().values().all(|b| b == true));
}

#[test]
fn example_without_output_prints_the_file() {
    let out = rankone(&["example", "group-c2", "--field", "F5"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["field"], serde_json::json!({"Fp": 5}));
    assert_eq!(v["dim"], 2);
}

#[test]
fn rank_one_on_larger_smash_flags_the_block() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "smash3.json", &["smash", "--n", "3"]);
    let out = rankone(&["rank-one", &path]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rank-one-violated"), "{text}");
    assert!(text.contains("counterexample-candidate"), "{text}");
}

#[test]
fn bgg_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "rrca.json", &["rrca-c2", "--c", "0"]);
    let out = rankone(&["bgg", &path, "--vermas", "triv,sign", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([[1, 1], [1, 1]]));
    assert_eq!(v["bggHolds"], true);
    let out = rankone(&["bgg", &path, "--vermas", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn not_split_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "c3.json", &["group-c3"]);
    let out = rankone(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not split"));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"dim\": 2}").unwrap();
    assert_eq!(rankone(&["validate", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(rankone(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(rankone(&["example", "smash", "--field", "F2"]).status.code(), Some(2));
}

#[test]
fn automatic_mode_matches_supplied_idempotents() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_example(dir.path(), "s3.json", &["group-s3", "--field", "F5"]);
    let a: Value = serde_json::from_slice(&rankone(&["analyze", &path, "--json"]).stdout).unwrap();
    let b: Value =
        serde_json::from_slice(&rankone(&["analyze", &path, "--json", "--automatic", "--seed", "3"]).stdout).unwrap();
    assert_eq!(a["cartan"], b["cartan"]);
    assert_eq!(a["classDims"], b["classDims"]);
    // over Q a noncommutative quotient needs the supplied idempotents
    let q = write_example(dir.path(), "s3q.json", &["group-s3"]);
    assert_eq!(rankone(&["analyze", &q, "--automatic"]).status.code(), Some(3));
}
