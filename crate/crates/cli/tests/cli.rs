use std::io::Write;
use std::process::{Command, Output, Stdio};

use holeforge::{gen, io};
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_holeforge"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("HOLEFORGE_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn edgelist_c5_has_odd_hole() {
    let r = json_lines(&run(&["odd-hole"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0"));
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["verdict"], "odd-hole");
    assert_eq!(r[0]["length"], 5);
    assert_eq!(r[0]["side"], "graph");
}

#[test]
fn report_schema() {
    let r = &json_lines(&run(&["shortest-odd-hole"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0"))[0];
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["input", "command", "verdict", "hole", "length", "side", "provenance", "timings_ms"] {
        assert!(keys.contains(&k), "missing {k}");
    }
}

#[test]
fn c17_shortest_odd_hole() {
    let text = io::encode_edgelist(&gen::cycle(17));
    let r = &json_lines(&run(&["shortest-odd-hole"], &text))[0];
    assert_eq!(r["length"], 17);
    assert!(["preprocessing", "medium"].contains(&r["provenance"].as_str().unwrap()));
}

#[test]
fn complement_c7_is_imperfect() {
    let text = io::encode_graph6(&gen::cycle(7).complement());
    let r = &json_lines(&run(&["is-perfect"], &text))[0];
    assert_eq!(r["verdict"], "odd-hole");
    assert_eq!(r["side"], "complement");
    assert_eq!(r["length"], 7);
}

#[test]
fn dimacs_triangle_is_perfect() {
    let r = &json_lines(&run(&["is-perfect"], "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"))[0];
    assert_eq!(r["verdict"], "perfect");
    assert!(r["hole"].is_null());
}

#[test]
fn gen_pyramid() {
    let out = run(&["gen", "--gadget", "pyramid", "--t1", "2", "--t2", "7", "--t3", "7"], "");
    assert!(out.status.success());
    let g = io::parse_edgelist(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(g.n(), 17);
    assert!(g.edges().eq(gen::pyramid(2, 7, 7).edges()));
}

#[test]
fn graph6_stream_gives_one_report_per_line() {
    let text = format!("{}\n{}\n", io::encode_graph6(&gen::cycle(5)), io::encode_graph6(&gen::cycle(6)));
    let r = json_lines(&run(&["shortest-odd-hole", "--format", "graph6"], &text));
    assert_eq!(r.len(), 2);
    assert_eq!(r[0]["length"], 5);
    assert_eq!(r[1]["verdict"], "none");
}

#[test]
fn disconnected_input_reports_best_component() {
    let g = gen::bridged(&gen::cycle(9), &gen::cycle(7), 1);
    let text = io::encode_edgelist(&g);
    let r = &json_lines(&run(&["shortest-odd-hole"], &text))[0];
    assert_eq!(r["length"], 7);
    let two = "14 14\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n7 8\n8 9\n9 10\n10 11\n11 12\n12 13\n13 7\n";
    let r = &json_lines(&run(&["shortest-odd-hole"], two))[0];
    assert_eq!(r["length"], 7);
}

#[test]
fn even_hole_desk() {
    let r = &json_lines(&run(&["even-hole-desk"], &io::encode_edgelist(&gen::cycle(24))))[0];
    assert_eq!(r["verdict"], "even-hole");
    assert_eq!(r["length"], 24);
    let r = &json_lines(&run(&["even-hole-desk"], &io::encode_edgelist(&gen::cycle(5))))[0];
    assert_eq!(r["verdict"], "none");
}

#[test]
fn oracle_caps() {
    let big = io::encode_edgelist(&gen::cycle(17));
    assert_eq!(run(&["oracle", "--query", "shortest-odd-hole"], &big).status.code(), Some(2));
    let r = &json_lines(&run(&["oracle", "--query", "shortest-odd-hole", "--unsafe-size"], &big))[0];
    assert_eq!(r["length"], 17);
    let mid = io::encode_edgelist(&gen::cycle(11));
    assert_eq!(run(&["oracle", "--query", "is-perfect"], &mid).status.code(), Some(2));
}

#[test]
fn deep_gate_above_24() {
    let text = io::encode_edgelist(&gen::cycle(25));
    assert_eq!(run(&["shortest-odd-hole"], &text).status.code(), Some(2));
    let r = &json_lines(&run(&["shortest-odd-hole", "--enable-deep"], &text))[0];
    assert_eq!(r["length"], 25);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["odd-hole", "--format", "xml"], "").status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(run(&["difftest", "--family", "nope"], "").status.code(), Some(1));
    assert_eq!(run(&["odd-hole"], "3 1\n0 9\n").status.code(), Some(2));
    assert_eq!(run(&["odd-hole"], "").status.code(), Some(2));
    let err = String::from_utf8(run(&["odd-hole"], "3 1\n0 9\n").stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn difftest_runs_clean() {
    let out = run(&["difftest", "--family", "random-gnp", "--trials", "2000", "--seed", "1"], "");
    let r = &json_lines(&out)[0];
    assert_eq!(r["mismatches"], 0);
    assert_eq!(r["trials"], 2000);
    let r = &json_lines(&run(&["difftest", "--family", "gadgets"], ""))[0];
    assert_eq!(r["mismatches"], 0);
    let out = run(&["difftest", "--family", "sparse-long-hole", "--max-n", "40"], "");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_reproducible_across_thread_counts() {
    let text: String = (0..6).map(|s| io::encode_graph6(&gen::sparse_long_hole(20, &mut gen::rng(s))) + "\n").collect();
    let one = run(&["--threads", "1", "--no-timings", "shortest-odd-hole"], &text);
    let four = run_env(&["--no-timings", "shortest-odd-hole"], &text, &[("HOLEFORGE_THREADS", "4")]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    let again = run(&["--threads", "1", "--no-timings", "shortest-odd-hole"], &text);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn bench_emits_rows() {
    let out = run(&["bench", "--sizes", "16,32"], "");
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["detector"], "medium");
}
