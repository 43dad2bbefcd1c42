use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use sparsehs::cli::RunReport;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_sparsehs")).args(args).output().unwrap();
    Run { code: out.status.code().unwrap(), stdout: String::from_utf8(out.stdout).unwrap() }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(r: &Run) -> RunReport {
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn hd_on_four_cycle() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.txt", "4 4\n0 1 1/1\n1 2 1/1\n2 3 1/1\n3 0 1/1\n");
    let out = run(&["hd", "--graph", s(&c4), "--plain"]);
    assert_eq!((out.code, out.stdout.trim()), (0, "2"));
    let full = run(&["hd", "--graph", s(&c4)]);
    let rep = report(&full);
    assert_eq!(rep.result, Value::from(2));
    assert_eq!(rep.command[0], "hd");
    assert_eq!(rep.input_digest.len(), 64);
}

#[test]
fn solve_k1_triangle_is_infeasible() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "tri.txt", "3 3\n0 1 1/1\n1 2 1/1\n0 2 1/1\n");
    let balls = write(&dir, "balls.json", "[[0, 1, 2]]");
    let out = run(&["solve-k1", "--graph", s(&g), "--balls", s(&balls), "--plain"]);
    assert_eq!((out.code, out.stdout.trim()), (1, "INFEASIBLE"));

    let edge = write(&dir, "edge.txt", "2 1\n0 1 1/1\n");
    let one = write(&dir, "one.json", "[[0, 1]]");
    let out = run(&["solve-k1", "--graph", s(&edge), "--balls", s(&one)]);
    assert_eq!(out.code, 0);
}

#[test]
fn verify_checks_reported_values() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "inst.json", r#"{"n": 3, "F": [[0, 1], [1, 2]], "B": [[0, 1, 2]]}"#);
    let good = write(&dir, "good.json", r#"{"H": [1], "sparseness": 1}"#);
    assert_eq!(run(&["verify", "--kind", "hitting-set", "--input", s(&inst), "--solution", s(&good)]).code, 0);
    let lying = write(&dir, "lying.json", r#"{"H": [0, 2], "sparseness": 1}"#);
    assert_eq!(run(&["verify", "--kind", "hitting-set", "--input", s(&inst), "--solution", s(&lying)]).code, 1);
    let missing = write(&dir, "missing.json", r#"{"H": [0], "sparseness": 1}"#);
    assert_eq!(run(&["verify", "--kind", "hitting-set", "--input", s(&inst), "--solution", s(&missing)]).code, 1);
}

#[test]
fn input_errors_exit_3() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "2 1\n0 5 1/1\n");
    assert_eq!(run(&["hd", "--graph", s(&bad)]).code, 3);
    assert_eq!(run(&["hd", "--graph", "/nonexistent/graph.txt"]).code, 3);
    assert_eq!(run(&["no-such-command"]).code, 3);
    let g = write(&dir, "edge.txt", "2 1\n0 1 1/1\n");
    assert_eq!(run(&["approx", "--algorithm", "rspc", "--input", s(&g), "--r", "1/2"]).code, 3);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn budget_exhaustion_exits_2() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "inst.json", r#"{"n": 6, "F": [[0, 1], [2, 3], [4, 5]], "B": [[0, 1, 2, 3, 4, 5]]}"#);
    assert_eq!(run(&["solve-exact", "--problem", "sparse-hs", "--input", s(&inst), "--budget", "1"]).code, 2);
    let out = run(&["solve-exact", "--problem", "sparse-hs", "--input", s(&inst)]);
    assert_eq!(out.code, 0);
    let rep = report(&out);
    assert_eq!(rep.result["sparseness"], Value::from(3));
    assert!(rep.nodes.unwrap() > 1);
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p5.txt", "5 4\n0 1 1/1\n1 2 1/1\n2 3 1/1\n3 4 1/1\n");
    let args = ["approx", "--algorithm", "rspc", "--input", s(&g), "--r", "1", "--seed", "7"];
    let first = run(&args);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, run(&args).stdout);
    let mmsc = write(&dir, "mmsc.json", r#"{"universe": 4, "sets": [[0, 1], [1, 2], [2, 3], [0, 3]]}"#);
    let args = ["approx", "--algorithm", "mmsc", "--input", s(&mmsc), "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn approx_reports_ratio_against_oracle() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k22.txt", "4 4\n0 2 1/1\n0 3 1/1\n1 2 1/1\n1 3 1/1\n");
    let balls = write(&dir, "balls.json", "[[0, 1, 2, 3]]");
    let oracle = write(&dir, "opt.json", r#"{"H": [0, 1], "sparseness": 2}"#);
    let out = run(&[
        "approx", "--algorithm", "sparse-vc", "--input", s(&g), "--balls", s(&balls), "--oracle", s(&oracle),
    ]);
    assert_eq!(out.code, 0);
    let rep = report(&out);
    let ratio = rep.ratio.unwrap();
    let (num, den) = ratio.split_once('/').unwrap();
    let (num, den): (u64, u64) = (num.parse().unwrap(), den.parse().unwrap());
    assert!(num <= 2 * den);
}

#[test]
fn generate_solve_verify_extract_pipeline() {
    let dir = TempDir::new().unwrap();
    let cnf = write(&dir, "f.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 3 0\n");
    let inst = dir.path().join("inst.json");
    let out = run(&["generate", "--reduction", "svc", "--input", s(&cnf), "--k", "2", "--instance-out", s(&inst)]);
    assert_eq!(out.code, 0);

    let sol = dir.path().join("sol.json");
    let out = run(&["solve-exact", "--problem", "sparse-hs", "--input", s(&inst), "--out", s(&sol)]);
    assert_eq!(out.code, 0);
    assert!(report(&out).result["sparseness"].as_u64().unwrap() <= 2);
    assert_eq!(run(&["verify", "--kind", "hitting-set", "--input", s(&inst), "--solution", s(&sol)]).code, 0);

    let out = run(&["extract", "--reduction", "svc", "--input", s(&cnf), "--k", "2", "--solution", s(&sol)]);
    assert_eq!(out.code, 0);
    assert_eq!(report(&out).result["satisfies"], Value::Bool(true));

    let assignment = write(&dir, "a.txt", "1 -2 3\n");
    let witness = dir.path().join("w.json");
    let out = run(&[
        "witness", "--reduction", "svc", "--input", s(&cnf), "--k", "2", "--assignment", s(&assignment), "--out",
        s(&witness),
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(run(&["verify", "--kind", "hitting-set", "--input", s(&inst), "--solution", s(&witness)]).code, 0);
}

#[test]
fn paths_and_radii() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "p3.txt", "3 2\n0 1 1/1\n1 2 1/1\n");
    let out = run(&["radii", "--graph", s(&g), "--plain"]);
    assert_eq!(out.code, 0);
    let radii: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(radii, serde_json::json!(["1/2", "1/1"]));
    let out = run(&["paths", "--graph", s(&g), "--r", "1", "--plain"]);
    assert_eq!(out.code, 0);
    let family: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(family["paths"][0]["vertex_set"], serde_json::json!([0, 1, 2]));
    assert_eq!(family["truncated"], Value::Bool(false));
}
