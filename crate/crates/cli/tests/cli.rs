use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twocoset")).args(args).output().expect("binary runs")
}

fn reports(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn sens_scan_exit_codes() {
    let out = run(&["sens-scan", "--k", "4", "--s", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(reports(&out)[0]["evidence"]["result"], "none");

    let out = run(&["sens-scan", "--k", "3", "--s", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(reports(&out)[0]["evidence"]["result"], "witness");

    let out = run(&["sens-scan", "--k", "2", "--s", "2", "--expect-witness"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(reports(&out)[0]["evidence"]["witness"]["table"], 6);

    assert_eq!(run(&["sens-scan", "--k", "7", "--s", "1"]).status.code(), Some(3));
    assert_eq!(run(&["sens-scan", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn verify_small_ranges() {
    let out = run(&["verify", "--kind", "sym", "--n", "2..5", "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    let numbers: Vec<u64> =
        reports(&out).iter().map(|r| r["evidence"]["report"]["clique_number"].as_u64().unwrap()).collect();
    assert_eq!(numbers, vec![1, 1, 2, 6]);
    assert!(!String::from_utf8_lossy(&out.stdout).contains("elapsed"));

    let out = run(&["verify", "--kind", "pm", "--n", "4..5"]);
    let counts: Vec<u64> =
        reports(&out).iter().map(|r| r["evidence"]["report"]["maximum_clique_count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![6, 10]);
    assert_eq!(run(&["verify", "--kind", "pm", "--n", "8"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--kind", "pm", "--n", "5..4"]).status.code(), Some(2));
}

#[test]
fn emitted_cliques_feed_cert() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("cliques");
    let out = run(&["verify", "--kind", "sym", "--n", "5", "--emit-cliques", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().collect();
    assert_eq!(files.len(), 10);
    let first = out_dir.join("sym-n5-clique000.json");
    let out = run(&["cert", first.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(reports(&out)[0]["evidence"]["certificate_complexity"], 2);
    let out = run(&["degree", first.to_str().unwrap()]);
    assert!(reports(&out)[0]["evidence"]["polynomial_degree"].as_u64().unwrap() <= 2);
}

#[test]
fn file_commands() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(&dir, "pair.json", r#"{"kind":"sym","n":5,"elements":[[1,2,3,4,5],[2,3,1,4,5]]}"#);
    let out = run(&["cert", &pair]);
    assert_eq!(out.status.code(), Some(0));
    let r = &reports(&out)[0]["evidence"];
    assert_eq!(r["members"][0]["size"], 4);
    assert_eq!(r["members"][0]["certificate"], serde_json::json!([[1, 1], [2, 2], [3, 3], [4, 4]]));

    let one = write(&dir, "one.json", &format!(r#"{{"kind":"sym","n":3,"elements":{}}}"#, all_s3()));
    let out = run(&["degree", &one, "--no-timings"]);
    assert_eq!(reports(&out)[0]["evidence"]["polynomial_degree"], 0);
    let out = run(&["cert", &one]);
    assert_eq!(reports(&out)[0]["evidence"]["certificate_complexity"], 0);
    let out = run(&["isotypic", &one, "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        reports(&out)[0]["evidence"]["components"][0],
        serde_json::json!({"lambda": [3], "norm_sq": "6", "dimension": 1})
    );

    let bad = write(&dir, "bad.json", "{not json");
    assert_eq!(run(&["degree", &bad]).status.code(), Some(2));
    assert_eq!(run(&["cert", "/nonexistent/file.json"]).status.code(), Some(2));
    let big = write(&dir, "big.json", r#"{"kind":"sym","n":7,"elements":[[1,2,3,4,5,6,7]]}"#);
    assert_eq!(run(&["isotypic", &big]).status.code(), Some(3));
}

fn all_s3() -> &'static str {
    "[[1,2,3],[1,3,2],[2,1,3],[2,3,1],[3,1,2],[3,2,1]]"
}

#[test]
fn properties_are_stable_across_threads() {
    let a = run(&["properties", "--no-timings", "--threads", "1", "--seed", "5"]);
    let b = run(&["properties", "--no-timings", "--threads", "4", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    assert!(reports(&a).iter().all(|r| r["status"] == "pass"));
    let only = run(&["properties", "--only", "bounds"]);
    assert_eq!(reports(&only).len(), 1);
    assert_eq!(run(&["properties", "--only", "nothing"]).status.code(), Some(2));
}
