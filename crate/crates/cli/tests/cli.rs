use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const K4: &str = "a b\na c\na d\nb c\nb d\nc d\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cliquereconf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn complete_edges(n: usize) -> String {
    let mut s = format!("n {n}\n");
    for u in 0..n {
        for v in u + 1..n {
            s += &format!("{u} {v}\n");
        }
    }
    s
}

#[test]
fn build_ts_of_k4_as_json() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", K4);
    let o = run(&["build", "--rule", "ts", "--k", "2", "--in", &k4, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["rule"], "ts");
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn build_writes_edge_list_and_dot_files() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", K4);
    let out = dir.path().join("simplex.edges");
    let o = run(&["build", "--rule", "simplex", "--in", &k4, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("n 16\n"));
    assert_eq!(text.lines().count(), 1 + 32);

    let o = run(&["build", "--rule", "tj", "--k", "3", "--in", &k4, "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
}

#[test]
fn build_requires_k_except_for_simplex() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", K4);
    assert_eq!(run(&["build", "--rule", "ts", "--in", &k4]).status.code(), Some(2));
    assert_eq!(run(&["build", "--rule", "simplex", "--k", "1", "--in", &k4]).status.code(), Some(2));
    assert_eq!(run(&["build", "--rule", "ts", "--k", "0", "--in", &k4]).status.code(), Some(2));
}

#[test]
fn verify_omega_formula_on_k5() {
    let dir = TempDir::new().unwrap();
    let k5 = write(&dir, "k5.edges", &complete_edges(5));
    let o = run(&["verify", "--theorem", "omega-formula", "--in", &k5, "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["values"]["cases"][0]["computed"], 4);
    for key in ["theorem", "input", "values", "seed", "elapsed_ms"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let k5 = write(&dir, "k5.edges", &complete_edges(5));
    let bad = write(&dir, "bad.edges", "a b c\n");
    let looped = write(&dir, "loop.edges", "a a\n");
    assert_eq!(run(&["verify", "--theorem", "nope", "--in", &k5]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "median", "--in", &bad]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "median", "--in", &looped]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "tj4", "--in", &k5]).status.code(), Some(2));
    assert_eq!(run(&["cliques", "--in", &k5, "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "median", "--in", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--theorem", "median", "--in", &k5, "--max-vertices", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cliques_listing() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", K4);
    let doc: Value = serde_json::from_str(&stdout(&run(&["cliques", "--in", &k4, "--k", "3"]))).unwrap();
    assert_eq!(doc["count"], 4);
    assert_eq!(doc["cliques"][0], serde_json::json!(["a", "b", "c"]));
    let doc: Value = serde_json::from_str(&stdout(&run(&["cliques", "--in", &k4]))).unwrap();
    assert_eq!(doc["kind"], "maximal");
    assert_eq!(doc["count"], 1);
}

#[test]
fn reconstruct_from_tj_file() {
    let dir = TempDir::new().unwrap();
    // TJ_3(diamond) is a single edge.
    let tj = write(&dir, "tj.edges", "x y\n");
    let out = dir.path().join("h.edges");
    let o = run(&["reconstruct", "--k", "3", "--in", &tj, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let h = cliquereconf_core::io::parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    let diamond = cliquereconf_core::Graph::diamond();
    let ts = cliquereconf_core::reconf::build_ts(&diamond, 2).unwrap();
    assert!(cliquereconf_core::iso::are_isomorphic(&h, ts.graph()));
}

#[test]
fn reconstruct_reports_not_k_good_with_exit_1() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let star = write(&dir, "star.edges", "c 1\nc 2\nc 3\n");
    assert_eq!(run(&["reconstruct", "--k", "2", "--in", &c5]).status.code(), Some(0));
    let o = run(&["reconstruct", "--k", "2", "--in", &star]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["witness"]["violation"]["kind"], "too-many-components");
}

#[test]
fn reconstruct_verify_on_base_graph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.edges", "a b\na c\nb c\na d\n");
    let o = run(&["reconstruct", "--verify", "--in", &g]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["values"]["c"], 1);
}

#[test]
fn planar_corpus_run_prints_one_pass_line_per_graph() {
    let o = run(&[
        "corpus", "--family", "planar", "--n", "10", "--count", "50", "--theorem", "ts-planar", "--k", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines.len(), 50);
    for line in lines {
        let doc: Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["pass"], true);
    }
    assert!(text.starts_with("# corpus family=planar n=10 count=50 seed="));
}

#[test]
fn corpus_output_is_byte_identical_across_runs_and_thread_counts() {
    let args = |threads: &'static str| {
        vec![
            "corpus", "--family", "random-gnp", "--n", "7", "--count", "40", "--seed", "99", "--theorem",
            "reconstruct", "--no-timing", "--threads", threads,
        ]
    };
    let a = run(&args("1"));
    let b = run(&args("4"));
    let c = run(&args("4"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
}

#[test]
fn non_planar_corpus_graphs_are_skipped_not_failed() {
    let o = run(&[
        "corpus", "--family", "random-gnp", "--n", "8", "--count", "10", "--p", "0.9", "--theorem", "tj4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"skipped\""));
}

#[test]
fn corpus_files_are_written_and_reparse() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("trees");
    let o = run(&[
        "corpus", "--family", "trees", "--n", "5", "--count", "3", "--seed", "1", "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<_> = fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    assert_eq!(names.len(), 3);
    for p in &names {
        let g = cliquereconf_core::io::parse_edge_list(&fs::read_to_string(p).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        assert!(Path::new(p).extension().unwrap() == "edges");
    }
}

#[test]
fn timeout_exits_3_with_partial_report() {
    let o = run(&[
        "corpus", "--family", "random-gnp", "--n", "40", "--count", "4", "--p", "0.8", "--theorem", "decompose",
        "--timeout", "0.2",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("# summary"));
    assert!(summary.contains("\"timed_out\":true"));
}
