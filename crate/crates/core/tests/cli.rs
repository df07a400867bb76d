use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_pseudohiggs"));
    c.env_remove("PSEUDOHIGGS_MAX_SEARCH");
    c
}

fn run(mut cmd: Command, stdin: &str) -> Output {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn h2_input() -> String {
    json!({"group": [4], "coeff_order": 4}).to_string()
}

#[test]
fn success_has_result_and_audit() {
    let mut c = bin();
    c.args(["cocycle", "h2", "-"]);
    let out = run(c, &h2_input());
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["classes"], 4);
    assert_eq!(v["audit"]["command"], "cocycle h2");
    assert!(v["audit"]["bounds"].is_object());
}

#[test]
fn domain_error_exits_one_with_code() {
    let mut c = bin();
    c.args(["moduli", "rh", "-"]);
    let out = run(c, &json!({"genus_x": 2, "N": 3, "orbits": []}).to_string());
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["error"], "NonIntegralGenus");
    assert!(v["detail"].is_string());
    assert!(v["audit"].is_object());
}

#[test]
fn malformed_json_exits_two() {
    let mut c = bin();
    c.args(["lie", "alcove", "-"]);
    let out = run(c, "{\"model\": ");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"], "MalformedInput");
}

#[test]
fn schema_mismatch_exits_two() {
    let mut c = bin();
    c.args(["lie", "alcove", "-"]);
    let out = run(
        c,
        &json!({"model": {"kind": "gl", "r": 2}, "exponents": ["1/x", "0"]}).to_string(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn misplaced_flag_exits_two() {
    let mut c = bin();
    c.args(["cocycle", "h2", "--twist", "1/2", "-"]);
    let out = run(c, &h2_input());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_bound_and_flag_precedence() {
    let mut c = bin();
    c.env("PSEUDOHIGGS_MAX_SEARCH", "16")
        .args(["cocycle", "h2", "-"]);
    let out = run(c, &h2_input());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"], "ScaleExceeded");

    let mut c = bin();
    c.env("PSEUDOHIGGS_MAX_SEARCH", "16")
        .args(["cocycle", "h2", "--max-search", "64", "-"]);
    let out = run(c, &h2_input());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["audit"]["bounds"]["max_search"], 64);

    let mut c = bin();
    c.env("PSEUDOHIGGS_MAX_SEARCH", "lots")
        .args(["cocycle", "h2", "-"]);
    assert_eq!(run(c, &h2_input()).status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let path: PathBuf =
        std::env::temp_dir().join(format!("pseudohiggs-cli-{}.json", std::process::id()));
    let mut c = bin();
    c.args(["cocycle", "h2", "--output"]).arg(&path).arg("-");
    let out = run(c, &h2_input());
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written["result"]["classes"], 4);
}

#[test]
fn repeated_runs_are_identical() {
    let input = json!({"model": {"kind": "upq", "p": 1, "q": 2}, "alpha": ["1/3", "1/2", "1/4"]})
        .to_string();
    let outs: Vec<Output> = (0..2)
        .map(|_| {
            let mut c = bin();
            c.args(["lie", "eigenspaces", "-"]);
            run(c, &input)
        })
        .collect();
    assert_eq!(outs[0].status.code(), Some(0));
    assert_eq!(outs[0].stdout, outs[1].stdout);
}

#[test]
fn corpus_replays_cleanly() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let out = bin().args(["corpus", "run"]).arg(&dir).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert_eq!(json_of(&out)["result"]["failed"], 0);
}

#[test]
fn empty_corpus_is_an_error() {
    let dir = std::env::temp_dir().join(format!("pseudohiggs-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = bin().args(["corpus", "run"]).arg(&dir).output().unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"], "EmptyCorpus");
}
