use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn medgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_medgraph")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut all = vec!["gen"];
    all.extend(args);
    all.extend(["-o", path.to_str().unwrap()]);
    json(&medgraph(&all));
    path
}

fn file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_canonical_files() {
    let dir = TempDir::new().unwrap();
    let path = gen(dir.path(), "c4.txt", &["cycle", "4"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
    let copy = gen(dir.path(), "c4b.txt", &["cycle", "4"]);
    assert_eq!(std::fs::read(&copy).unwrap(), text.as_bytes());
}

#[test]
fn median_examples() {
    let dir = TempDir::new().unwrap();
    let c7 = gen(dir.path(), "c7.txt", &["cycle", "7"]);
    let pi = file(dir.path(), "pi.txt", "0 3\n3 3\n5 1\n");
    let r = json(&medgraph(&["median", s(&c7), s(&pi), "-p", "2"]));
    assert_eq!(r["result"]["median_set"], serde_json::json!([0, 3]));
    assert_eq!(r["result"]["median_set_p_connected"], false);

    let p3 = gen(dir.path(), "p3.txt", &["path", "3"]);
    let ends = file(dir.path(), "ends.txt", "0 1\n2 1\n");
    let r = json(&medgraph(&["median", s(&p3), s(&ends), "-p", "1"]));
    assert_eq!(r["result"]["median_set"], serde_json::json!([0, 1, 2]));
    assert_eq!(r["result"]["median_set_p_connected"], true);

    let fano = gen(dir.path(), "g2.txt", &["projective", "2"]);
    let ones: String = (0..16).map(|v| format!("{v} 1\n")).collect();
    let ones = file(dir.path(), "ones.txt", &ones);
    let r = json(&medgraph(&["median", s(&fano), s(&ones), "-p", "2"]));
    assert_eq!(r["result"]["min_value"], "24");
    assert_eq!(r["result"]["median_set"], serde_json::json!([14, 15]));
    assert_eq!(r["result"]["median_set_p_connected"], false);

    let bad = file(dir.path(), "bad.txt", "40 1\n");
    assert_eq!(medgraph(&["median", s(&p3), s(&bad)]).status.code(), Some(2));
}

#[test]
fn pvalue_examples() {
    let dir = TempDir::new().unwrap();
    let c7 = gen(dir.path(), "c7.txt", &["cycle", "7"]);
    let r = json(&medgraph(&["pvalue", s(&c7), "--oracle", "2"]));
    assert_eq!(r["result"]["p"], 3);
    assert_eq!(r["result"]["oracle"]["agree"], true);
    assert_eq!(r["result"]["witness"]["d"], 3);

    let h4 = gen(dir.path(), "h4.txt", &["hypercube", "4"]);
    assert_eq!(json(&medgraph(&["pvalue", s(&h4), "--restrict-j"]))["result"]["p"], 1);

    let spec = file(dir.path(), "naph.txt", "0 0\n1 0\n");
    let naph = dir.path().join("naph-graph.txt");
    json(&medgraph(&["gen", "benzenoid", "--benzenoid-spec", s(&spec), "-o", s(&naph)]));
    assert!(json(&medgraph(&["pvalue", s(&naph)]))["result"]["p"].as_u64().unwrap() <= 2);
}

#[test]
fn check_examples() {
    let dir = TempDir::new().unwrap();
    let beta = gen(dir.path(), "beta.txt", &["beta"]);
    assert_eq!(json(&medgraph(&["check", "chordal", s(&beta)]))["result"]["verdict"], true);
    let c6 = gen(dir.path(), "c6.txt", &["cycle", "6"]);
    let r = json(&medgraph(&["check", "meshed", s(&c6)]));
    assert_eq!(r["result"]["verdict"], false);
    assert_eq!(r["result"]["witness"].as_array().unwrap().len(), 3);
    let c5 = gen(dir.path(), "c5.txt", &["cycle", "5"]);
    assert_eq!(json(&medgraph(&["check", "cb", s(&c5)]))["result"]["verdict"], true);
    assert_eq!(medgraph(&["check", "nope", s(&c5)]).status.code(), Some(2));
}

#[test]
fn labels_round_trip_through_check() {
    let dir = TempDir::new().unwrap();
    let labels = dir.path().join("j.labels");
    let j = dir.path().join("j.txt");
    json(&medgraph(&["gen", "johnson", "5", "2", "-o", s(&j), "--labels", s(&labels)]));
    let r = json(&medgraph(&["check", "johnson-medians", s(&j), "--embedding", s(&labels)]));
    assert_eq!(r["result"]["verdict"], true);
    // without the target line the class picks it
    let text = std::fs::read_to_string(&labels).unwrap();
    let bare = file(dir.path(), "bare.labels", text.split_once('\n').unwrap().1);
    let r = json(&medgraph(&["check", "johnson-medians", s(&j), "--embedding", s(&bare)]));
    assert_eq!(r["result"]["verdict"], true);
    let c5 = gen(dir.path(), "c5.txt", &["cycle", "5"]);
    let out = medgraph(&["gen", "cycle", "5", "-o", s(&c5), "--labels", s(&labels)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = file(dir.path(), "bad.txt", "3 2\n0 1\n1 x\n");
    let out = medgraph(&["pvalue", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(medgraph(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(medgraph(&["verify-paper", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_paper_reports_each_check() {
    let r = json(&medgraph(&["verify-paper", "fano"]));
    assert_eq!(r["result"]["passed"], true);
    assert_eq!(r["result"]["checks"][0]["criterion"], 3);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let dir = TempDir::new().unwrap();
    let g = gen(dir.path(), "g.txt", &["projective", "2"]);
    let strip = |mut v: Value| {
        v["wall_time_ms"] = Value::Null;
        v
    };
    let one = strip(json(&medgraph(&["--jobs", "1", "pvalue", s(&g)])));
    let four = strip(json(&medgraph(&["--jobs", "4", "pvalue", s(&g)])));
    assert_eq!(one, four);
    let env = Command::new(env!("CARGO_BIN_EXE_medgraph"))
        .env("MEDGRAPH_JOBS", "2")
        .args(["pvalue", s(&g)])
        .output()
        .unwrap();
    assert_eq!(strip(json(&env)), one);
}
