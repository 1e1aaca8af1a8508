use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_orientflip"));
    c.env_remove("ORIENTFLIP_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C3: &str = "3 3\n0 1\n1 2\n2 0\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

/// Flip ids printed by `orient` / `reconfigure` (comment lines dropped).
fn flips(o: &Output) -> Vec<usize> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.parse().unwrap())
        .collect()
}

fn apply(bits: &str, flips: &[usize]) -> String {
    let mut b: Vec<u8> = bits.bytes().collect();
    for &e in flips {
        b[e] = if b[e] == b'0' { b'1' } else { b'0' };
    }
    String::from_utf8(b).unwrap()
}

#[test]
fn lambda_of_graphs_and_orientations() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.txt", C3);
    let k4 = write(&dir, "k4.txt", K4);
    let fwd = write(&dir, "fwd.txt", "000\n");
    assert_eq!(stdout(&run(&["lambda", s(&c3)])), "2\n");
    assert_eq!(stdout(&run(&["lambda", s(&c3), s(&fwd)])), "1\n");
    assert_eq!(stdout(&run(&["lambda", s(&k4)])), "3\n");
}

#[test]
fn parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n");
    let o = run(&["lambda", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let c3 = write(&dir, "c3.txt", C3);
    let short = write(&dir, "o.txt", "01\n");
    assert_eq!(run(&["lambda", s(&c3), s(&short)]).status.code(), Some(2));
    assert_eq!(run(&["lambda", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(run(&["orient", s(&c3)]).status.code(), Some(2));
}

#[test]
fn orient_already_connected_prints_empty_sequence() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.txt", C3);
    let fwd = write(&dir, "fwd.txt", "000\n");
    let o = run(&["orient", s(&c3), s(&fwd), "--k", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "# lambda: 1\n");
}

#[test]
fn orient_doubled_triangle_to_level_two() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", &stdout(&run(&["gen", "cycle", "3", "--mult", "2"])));
    // 0 -> 1 -> 2 and 0 -> 2, each doubled: acyclic
    let start = "000011";
    let o0 = write(&dir, "o.txt", start);
    let json = dir.path().join("report.json");
    let o = run(&["orient", s(&g), s(&o0), "--k", "2", "--json", s(&json)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).ends_with("# lambda: 2\n"));
    let seq = flips(&o);

    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["k"], 2);
    assert_eq!(report["graph"]["n"], 3);
    assert_eq!(report["graph"]["m"], 6);
    assert_eq!(report["inputs_digest"].as_str().unwrap().len(), 64);
    let lambdas: Vec<u64> = report["lambdas"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let sequence: Vec<usize> =
        report["sequence"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect();
    assert_eq!(sequence, seq);
    assert_eq!(lambdas.len(), seq.len());
    assert!(lambdas.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(lambdas.last(), Some(&2));

    // replay every prefix with the lambda command
    for i in 1..=seq.len() {
        let bits = apply(start, &seq[..i]);
        let p = write(&dir, "step.txt", &bits);
        let l: u64 = stdout(&run(&["lambda", s(&g), s(&p)])).trim().parse().unwrap();
        assert_eq!(l, lambdas[i - 1]);
    }
}

#[test]
fn orient_rejects_underlying_connectivity() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.txt", C3);
    let fwd = write(&dir, "fwd.txt", "000\n");
    let o = run(&["orient", s(&c3), s(&fwd), "--k", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edge-connectivity"));
}

#[test]
fn reconfigure_triangle_is_obstructed() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.txt", C3);
    let cw = write(&dir, "cw.txt", "000");
    let ccw = write(&dir, "ccw.txt", "111");
    let o = run(&["reconfigure", s(&c3), s(&cw), s(&ccw), "--k", "1"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(stdout(&o), "OBSTRUCTION 0 1\n");
}

#[test]
fn reconfigure_identical_and_k4_pair() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", K4);
    let a = write(&dir, "a.txt", "010010");
    let b = write(&dir, "b.txt", "101101");
    let o = run(&["reconfigure", s(&k4), s(&a), s(&a)]);
    assert!(o.status.success());
    assert!(flips(&o).is_empty());

    let o = run(&["reconfigure", s(&k4), s(&a), s(&b), "--k", "1"]);
    assert!(o.status.success());
    let seq = flips(&o);
    assert_eq!(seq.len(), 6);
    assert_eq!(apply("010010", &seq), "101101");
}

#[test]
fn reconfigure_level_two_and_cap() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", &stdout(&run(&["gen", "complete", "4", "--mult", "2"])));
    // each K4 edge doubled with the same direction as the strong "010010"
    let a_bits = "001100001100";
    let b_bits = "110011110011";
    let a = write(&dir, "a.txt", a_bits);
    let b = write(&dir, "b.txt", b_bits);
    let o = run(&["reconfigure", s(&g), s(&a), s(&b), "--k", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(apply(a_bits, &flips(&o)), b_bits);

    let o = run(&["reconfigure", s(&g), s(&a), s(&b), "--k", "2", "--cap", "1"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).starts_with("MIDDLE-SEARCH-CAP\n"));
    let o = bin()
        .args(["reconfigure", s(&g), s(&a), s(&b), "--k", "2"])
        .env("ORIENTFLIP_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn flipgraph_statistics() {
    let dir = TempDir::new().unwrap();
    let c3 = write(&dir, "c3.txt", C3);
    let k4 = write(&dir, "k4.txt", K4);
    assert_eq!(
        stdout(&run(&["flipgraph", s(&c3), "--k", "1"])),
        "nodes=2 edges=0 connected=false diameter=inf\n"
    );
    let dot = dir.path().join("k4.dot");
    let o = run(&["flipgraph", s(&k4), "--k", "1", "--dot", s(&dot)]);
    let line = stdout(&o);
    assert!(line.starts_with("nodes=24 "), "{line}");
    assert!(line.contains("connected=true"));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.starts_with("graph") && dot.contains("010010"));
    assert_eq!(
        stdout(&run(&["flipgraph", s(&k4), "--k", "2"])),
        "nodes=0 edges=0 connected=false diameter=inf\n"
    );
}

#[test]
fn flipgraph_too_large_exits_6() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", K4);
    assert_eq!(run(&["flipgraph", s(&k4), "--cap", "5"]).status.code(), Some(6));
    let big = write(&dir, "big.txt", &stdout(&run(&["gen", "complete", "8"])));
    assert_eq!(run(&["flipgraph", s(&big)]).status.code(), Some(6));
}

#[test]
fn gen_prints_parseable_graphs() {
    let out = stdout(&run(&["gen", "cycle", "4", "--mult", "2"]));
    assert_eq!(out.lines().find(|l| !l.starts_with('#')), Some("4 8"));
    assert_eq!(run(&["gen", "cycle", "1"]).status.code(), Some(2));
}
