use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn foldkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foldkit"))
        .args(args)
        .env_remove("FOLDKIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = foldkit(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let text = stdout(&full);
    assert_eq!(text.lines().count(), 1, "one record per invocation");
    serde_json::from_str(&text).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn fold_count() {
    assert_eq!(stdout(&["fold", "count", "AaABba"]), "2\n");
    assert_eq!(stdout(&["fold", "count", "A1 a1, A2 a2"]), "1\n");
    assert_eq!(json(&["fold", "count", "AaAaAaAaAaAaAaAaAaAaAaAaAaAaAaAaAaAaAaAa"])["count"], 6564120420u64);
}

#[test]
fn fold_outputs() {
    assert_eq!(stdout(&["fold", "greedy", "AaABba"]), "[[1,2],[3,6],[4,5]]\n");
    let v = json(&["fold", "enumerate", "AaABba"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["foldings"][1]["tree"], "(()())");
    let tsv = stdout(&["fold", "enumerate", "AaAa", "--format", "tsv"]);
    assert_eq!(tsv, "index\tpairs\ttree\n1\t[[1,2],[3,4]]\t()()\n2\t[[1,4],[2,3]]\t(())\n");
    let v = json(&["fold", "classify", "AaABba"]);
    assert_eq!((v["count"].as_u64(), v["one_foldable"].as_bool()), (Some(2), Some(false)));
    let v = json(&["fold", "moves", "AaAa", "--from", "[[1,4],[2,3]]"]);
    assert_eq!(v["moves"][0]["kind"], 2);
    assert_eq!(stdout(&["word", "double", "AaABba"]), "AaAdDa\n");
    assert_eq!(json(&["word", "check", "AaBb"])["alternating"], true);
}

#[test]
fn fold_graph_dot() {
    let dot = stdout(&["fold", "graph", "AaAa", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=\"[[").count(), 2, "two nodes");
    assert_eq!(dot.matches(" -> ").count(), 1);
    assert!(dot.contains("kind=1"));
}

#[test]
fn rset_compute_json() {
    let v = json(&["rset", "compute", "--n", "4", "--m", "1"]);
    let keys: Vec<u64> = v["counts"].as_array().unwrap().iter().map(|r| r["k"].as_u64().unwrap()).collect();
    assert_eq!(keys, [0, 1, 2, 3, 4, 5, 14]);
    assert_eq!(v["words"], 256);
    let tsv = stdout(&["rset", "compute", "--n", "2", "--format", "tsv"]);
    assert_eq!(tsv, "k\twords\n0\t10\n1\t4\n2\t2\n");
}

#[test]
fn rset_output_is_thread_independent() {
    let one = stdout(&["rset", "compute", "--n", "6", "--m", "1", "--threads", "1", "--format", "json"]);
    let many = stdout(&["rset", "compute", "--n", "6", "--m", "1", "--threads", "4", "--format", "json"]);
    assert_eq!(one, many);
}

#[test]
fn checkpoint_resume() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let args = ["rset", "compute", "--n", "8", "--checkpoint", path, "--format", "json"];
    let first = stdout(&args);
    let shard = dir.path().join("census_n8_m1_block0.json");
    assert!(shard.exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 16);
    // a doctored shard is trusted on resume, which shows it was read
    let text = fs::read_to_string(&shard).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["counts"].as_array_mut().unwrap().push(serde_json::json!({"k": 999, "words": 1}));
    fs::write(&shard, v.to_string()).unwrap();
    let resumed = stdout(&args);
    assert_ne!(first, resumed);
    assert!(resumed.contains("\"k\":999"));
    // a corrupt shard is recomputed
    fs::write(&shard, "not json").unwrap();
    assert_eq!(stdout(&args), first);
    let alt = tempfile::tempdir().unwrap();
    stdout(&["rset", "compute", "--n", "2", "--m", "2", "--alternating", "--checkpoint", alt.path().to_str().unwrap()]);
    assert!(alt.path().join("census_n2_m2_alt_block0.json").exists());
}

#[test]
fn budget_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_foldkit"))
        .args(["rset", "compute", "--n", "5"])
        .env("FOLDKIT_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("exceeds the budget 1000"));
    let out = Command::new(env!("CARGO_BIN_EXE_foldkit"))
        .args(["rset", "compute", "--n", "2"])
        .env("FOLDKIT_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn superset_and_sequences() {
    assert_eq!(stdout(&["rset", "superset", "--n", "5"]), "0,1,2,3,4,5,6,7,10,14,42\n");
    assert_eq!(stdout(&["seq", "catalan", "--upto", "4", "--format", "tsv"]), "i\tcatalan\n0\t1\n1\t1\n2\t2\n3\t5\n4\t14\n");
    let v = json(&["family", "product", "--t", "2", "--n", "5", "--verify"]);
    assert_eq!((v["word"].as_str(), v["expected"].as_u64(), v["verified"].as_bool()), (Some("AaAaaAaAaA"), Some(10), Some(true)));
}

#[test]
fn enum_commands() {
    let v = json(&["enum", "one-foldable", "--upto", "4", "--m", "2", "--verify-brute"]);
    assert_eq!(v["rows"][2]["value"], 24);
    assert_eq!(v["verified"], true);
    let v = json(&["enum", "walks", "--n", "2", "--m", "4"]);
    assert_eq!(v["rows"][0]["value"], 28);
    let v = json(&["enum", "foldable", "--upto", "4", "--verify-brute"]);
    assert_eq!(v["rows"][4]["brute"], 70);
    let v = json(&["enum", "growth-rate"]);
    assert!((v["base"].as_f64().unwrap() - 8.65936223).abs() < 1e-7);
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 9] = [
        (&["fold", "greedy", "ABab"], 1),
        (&["fold", "moves", "AB"], 1),
        (&["enum", "walks", "--n", "2", "--m", "1"], 1),
        (&["rset", "topgap", "--n", "12"], 2),
        (&["fold", "count", "Ax9"], 2),
        (&["fold", "count"], 2),
        (&["rset", "superset", "--n", "3", "--format", "dot"], 2),
        (&["family", "jcl", "--n", "4"], 2),
        (&["bogus"], 2),
    ];
    for (args, code) in cases {
        let out = foldkit(args);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        let err = stderr_of(&out);
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("error:"), "{args:?}: {err}");
    }
    assert_eq!(foldkit(&["--help"]).status.code(), Some(0));
}
