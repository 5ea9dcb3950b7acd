use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use antipodal::constructions::base_polytope;
use antipodal::constructions::BaseKind;
use antipodal::io::{read_config, write_config};

fn antipod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antipod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn count_octahedron_with_both_oracles() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("octahedron.json");
    write_config(&file, &base_polytope(BaseKind::CrossPolytope, 3, None).unwrap()).unwrap();
    let certs = dir.path().join("certs.json");
    let o = antipod(&[
        "count",
        "--input",
        path(&file),
        "--oracle",
        "both",
        "--certificates",
        path(&certs),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    for line in [
        "a = 15 (lp)",
        "a = 15 (diffbody)",
        "sa = 3 (lp)",
        "sa = 3 (diffbody)",
        "oracles agree",
    ] {
        assert!(out.contains(line), "missing '{line}' in\n{out}");
    }
    let records: Vec<serde_json::Value> = serde_json::from_str(&fs::read_to_string(&certs).unwrap()).unwrap();
    assert_eq!(records.len(), 18);
}

#[test]
fn construct_then_count() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cp.json");
    let o = antipod(&[
        "construct",
        "--name",
        "crosspoly_pyramid",
        "--params",
        "d=4,k=2",
        "--out",
        path(&file),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_config(&file).unwrap().len(), 6);
    let o = antipod(&["count", "--input", path(&file), "--mode", "strict"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sa = 11 (lp)"));
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json");
    assert_eq!(
        antipod(&["construct", "--name", "no_such_thing", "--out", path(&out)])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(antipod(&["count"]).status.code(), Some(2));
    assert_eq!(antipod(&["frobnicate"]).status.code(), Some(2));
    let o = antipod(&[
        "construct",
        "--name",
        "crosspoly_pyramid",
        "--params",
        "d=3,k=7",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"dim\": 2, \"points\": [[\"1\", \"x\"]]}").unwrap();
    let o = antipod(&["count", "--input", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("points[0][1]"));
}

#[test]
fn flat_input_needs_reembedding() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("flat.json");
    fs::write(
        &file,
        r#"{"dim": 3, "points": [["0","0","0"],["1","0","0"],["1","1","0"],["0","1","0"]]}"#,
    )
    .unwrap();
    assert_eq!(antipod(&["count", "--input", path(&file)]).status.code(), Some(2));
    let o = antipod(&["count", "--input", path(&file), "--in-affine-hull"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sa = 2 (lp)"));
}

#[test]
fn segments_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("seg.json");
    let o = antipod(&["segments", "--construction", "prism_three", "--out", path(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        antipod(&["segments", "--input", path(&file), "--mode", "strict"])
            .status
            .code(),
        Some(0)
    );
    let o = antipod(&["segments", "--construction", "parallel_four", "--mode", "strict"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (r1, r2) = (dir.path().join("r1.json"), dir.path().join("r2.json"));
    for r in [&r1, &r2] {
        let o = antipod(&["verify", "--suite", "bounds_consistency", "--report", path(r)]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("criterion 8 bounds_consistency: PASS"));
    }
    let text = fs::read_to_string(&r1).unwrap();
    assert_eq!(text, fs::read_to_string(&r2).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["summary"]["passed"], 1);
    assert!(v["seeds"]["search"].is_u64());
    assert_eq!(antipod(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn bounds_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let o = antipod(&["bounds", "--dmax", "5", "--csv", path(&csv)]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 1 + 2 + 3 + 4);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.lines().any(|l| l.starts_with("4,2,6,11,11,11,")), "{text}");
}

#[test]
fn search_writes_result_and_log() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("best.json");
    let o = antipod(&[
        "search",
        "--d",
        "2",
        "--n",
        "5",
        "--mode",
        "strict",
        "--objective",
        "minimize",
        "--seed",
        "3",
        "--budget",
        "2000",
        "--restarts",
        "2",
        "--stop-at",
        "3",
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_config(&out).unwrap().len(), 5);
    let log: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("best.log.json")).unwrap()).unwrap();
    assert_eq!(log["best_value"], 3);
    assert_eq!(log["task"]["seed"], 3);
}
