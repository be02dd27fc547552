use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use braidrep_cli::RepFile;
use braidrep_core::braid::{burau, tym_standard};
use braidrep_core::friendship::Analysis;

fn braidrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidrep")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = braidrep(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn read_file(path: &Path) -> RepFile {
    RepFile::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn build_examples() {
    let dir = tempfile::tempdir().unwrap();
    let tym = read_file(&build(dir.path(), "tym6.json", &["--family", "tym", "--n", "6"]));
    assert_eq!(tym, RepFile::from_rep(&tym_standard(6).unwrap()));
    assert_eq!((tym.field.as_str(), tym.generators.len()), ("Q(t)", 5));
    assert!(tym.generators.iter().all(|m| m.len() == 6 && m.iter().all(|row| row.len() == 6)));

    let c = read_file(&build(dir.path(), "chi.json", &["--family", "chi", "--n", "5", "--y", "2"]));
    assert_eq!(c.dimension, 1);
    assert_eq!(c.generators, vec![vec![vec!["2".to_string()]]; 4]);

    let s = read_file(&build(
        dir.path(),
        "b.json",
        &["--family", "burau-reduced", "--n", "4", "--specialize", "t=-1/2"],
    ));
    assert_eq!(s.field, "Q");
    assert_eq!(s.generators[0][0][0], "1/2");

    let out = dir.path().join("x.json");
    let out = out.to_str().unwrap();
    for args in [
        vec!["build", "--family", "burau", "--n", "2", "--out", out],
        vec!["build", "--family", "chi", "--n", "4", "--out", out],
        vec!["build", "--family", "chi", "--n", "4", "--y", "0", "--out", out],
        vec!["build", "--family", "tym", "--n", "4", "--specialize", "2", "--out", out],
        vec!["build", "--family", "tym", "--n", "4", "--y", "1/t", "--specialize", "t=0", "--out", out],
        vec!["build", "--family", "hecke", "--n", "4", "--out", out],
    ] {
        assert_eq!(braidrep(&args).status.code(), Some(2), "{args:?}");
    }
    assert!(!Path::new(out).exists());
}

#[test]
fn analyze_lemmas_on_tym6() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "tym6.json", &["--family", "tym", "--n", "6"]);
    let o = braidrep(&["analyze", f.to_str().unwrap(), "--lemmas", "4.5,4.7,4.12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("corank: 2"));
    assert!(text.contains("classification: case_I"));
    for id in ["4.5", "4.7", "4.12"] {
        assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == [id, "holds"]), "{text}");
    }
    let o = braidrep(&["analyze", f.to_str().unwrap(), "--lemmas", "9.9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupted_file_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "tym6.json", &["--family", "tym", "--n", "6"]);
    let mut rep = read_file(&f);
    rep.generators[1][0][0] = "2".to_string();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, rep.to_json()).unwrap();
    let o = braidrep(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("braid relation fails at i = 1"), "{err}");

    rep.generators.pop();
    std::fs::write(&bad, rep.to_json()).unwrap();
    assert_eq!(braidrep(&["analyze", bad.to_str().unwrap()]).status.code(), Some(3));
    std::fs::write(&bad, "{\"n\": 3}").unwrap();
    assert_eq!(braidrep(&["analyze", bad.to_str().unwrap()]).status.code(), Some(3));
    let missing = dir.path().join("missing.json");
    assert_eq!(braidrep(&["analyze", missing.to_str().unwrap()]).status.code(), Some(2));
}

fn dot_edges(dot: &str) -> Vec<(usize, usize, String)> {
    let mut lines = dot.lines();
    assert_eq!(lines.next(), Some("graph friendship {"));
    assert_eq!(dot.lines().last(), Some("}"));
    let mut out = Vec::new();
    for l in lines.filter(|l| l.contains("--")) {
        let l = l.trim().strip_suffix(';').unwrap();
        let (ends, label) = l.split_once(" [label=").unwrap();
        let (a, b) = ends.split_once(" -- ").unwrap();
        let i = a.strip_prefix('A').unwrap().parse().unwrap();
        let j = b.strip_prefix('A').unwrap().parse().unwrap();
        out.push((i, j, label.trim_end_matches(']').trim_matches('"').to_string()));
    }
    out
}

#[test]
fn trivial_graph_has_no_edges() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "chi1.json", &["--family", "chi", "--n", "5", "--y", "1"]);
    let dot = dir.path().join("g.dot");
    let o = braidrep(&["analyze", f.to_str().unwrap(), "--graph", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot_edges(&dot).is_empty());
    assert_eq!(dot.lines().filter(|l| l.trim().starts_with('A')).count(), 5);
}

#[test]
fn tym6_graph_golden() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "tym6.json", &["--family", "tym", "--n", "6"]);
    let dot = dir.path().join("g.dot");
    braidrep(&["analyze", f.to_str().unwrap(), "--graph", dot.to_str().unwrap()]);
    let got = std::fs::read_to_string(dot).unwrap();
    let want = include_str!("golden/tym6.dot");
    assert_eq!(got, want);
}

#[test]
fn dot_edges_match_tables() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args, rep) in [
        ("tym7.json", ["--family", "tym", "--n", "7"], tym_standard(7).unwrap()),
        ("burau5.json", ["--family", "burau", "--n", "5"], burau(5, false).unwrap()),
    ] {
        let f = build(dir.path(), name, &args);
        let dot = dir.path().join("g.dot");
        braidrep(&["analyze", f.to_str().unwrap(), "--graph", dot.to_str().unwrap()]);
        let edges = dot_edges(&std::fs::read_to_string(dot).unwrap());
        let v = rep.verify().unwrap();
        let g = Analysis::new(&v).graph().clone();
        let n = g.n;
        let expect: Vec<(usize, usize, String)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| g.f(i, j) >= 1)
            .map(|(i, j)| (i, j, format!("f={},tf={}", g.f(i, j), g.tf(i, j))))
            .collect();
        assert_eq!(edges, expect);
    }
}

#[test]
fn round_trip_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "tym8.json", &["--family", "tym", "--n", "8"]);
    let again = dir.path().join("again.json");
    std::fs::write(&again, read_file(&f).to_json()).unwrap();
    assert_eq!(std::fs::read(&f).unwrap(), std::fs::read(&again).unwrap());

    let (j1, j2) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let o1 = braidrep(&["analyze", f.to_str().unwrap(), "--json", j1.to_str().unwrap()]);
    let o2 = Command::new(env!("CARGO_BIN_EXE_braidrep"))
        .args(["analyze", again.to_str().unwrap(), "--json", j2.to_str().unwrap()])
        .env("BRAIDREP_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o1.stdout, o2.stdout);
    let (a, b) = (std::fs::read_to_string(&j1).unwrap(), std::fs::read_to_string(&j2).unwrap());
    assert_eq!(a, b);

    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["corank"], 2);
    assert_eq!(v["classification"], "case_I");
    assert_eq!(v["f_k"], serde_json::json!([1, 0, 0, 0, 0, 0, 1]));
    assert!(v["f"][0][0].is_null());
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(a.find("\"anomalies\"").unwrap() < a.find("\"tf_k\"").unwrap());
}

#[test]
fn analyze_reduce_and_chain() {
    let dir = tempfile::tempdir().unwrap();
    let f =
        build(dir.path(), "b.json", &["--family", "burau", "--n", "7", "--specialize", "t=2", "--y", "5"]);
    let o = braidrep(&["analyze", f.to_str().unwrap(), "--reduce", "--chain"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("corank: 7"), "{text}");
    assert!(text.contains("corank 7 -> 1"), "{text}");
    assert!(text.contains("chain dim U_k, k = 1..n-1: 7 7 7 7 7 7"), "{text}");
}

#[test]
fn certify_examples() {
    let o = braidrep(&["certify", "--n", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n = 11: certified"));
    assert!(text.lines().any(|l| {
        let w: Vec<_> = l.split_whitespace().collect();
        w == ["n+1", "<=", "n/2+6", "lhs=12", "rhs=11.5", "violated"]
    }));

    assert!(stdout(&braidrep(&["certify", "--n", "9"])).contains("out of range"));

    let text = stdout(&braidrep(&["certify", "--range", "7..14"]));
    let heads: Vec<&str> = text.lines().filter(|l| l.starts_with("n = ")).collect();
    assert_eq!(heads.len(), 8);
    assert!(heads[3].starts_with("n = 10: certified via special case"));

    let jl = stdout(&braidrep(&["certify", "--n", "12", "--jsonl"]));
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/certificate_12.jsonl"),
    )
    .unwrap();
    assert_eq!(jl, golden);

    for args in [
        vec!["certify", "--range", "14..7"],
        vec!["certify", "--range", "x"],
        vec!["certify", "--n", "2"],
        vec!["certify"],
        vec!["certify", "--n", "5", "--range", "5..6"],
    ] {
        assert_eq!(braidrep(&args).status.code(), Some(2), "{args:?}");
    }
}
