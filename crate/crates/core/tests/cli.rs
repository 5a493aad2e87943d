use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use soficlab::fsg::{build_fsg, validate_fsg, FollowerSetGraph};
use soficlab::{corpus, Convention};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soficlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn fsg_dot_has_five_nodes() {
    let o = run(&["fsg", "--forbidden", &data("first.fw"), "--emit", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (5, 8));
}

#[test]
fn fsg_json_round_trips() {
    let o = run(&["fsg", "--forbidden", &data("first.fw")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let g = FollowerSetGraph::from_json(&text, Convention::Left).unwrap();
    assert!(validate_fsg(&g).passed());
    assert_eq!(g.to_json(Convention::Left), text);
    assert!(g.same_structure(&build_fsg(&corpus::first()).unwrap()));
}

#[test]
fn augmentation_adds_one_edge_per_vertex() {
    let o = run(&["fsg", "--forbidden", &data("first.fw"), "--augment", "z"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["alphabet"].as_array().unwrap().len(), 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 13);
    let o = run(&["fsg", "--forbidden", &data("first.fw"), "--augment", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unlabeled_compare_emits_a_witness() {
    let o = run(&["compare", "--unlabeled", &data("even.json"), &data("sft001.fw")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let vm = &doc["witness"]["vertex_map"];
    assert_eq!(vm["F(∅)"], "F(∅)");
    assert_eq!(vm["F(1)"], "F(1)");
    assert_eq!(vm["F(01)"], "F(01)");
    assert_eq!(doc["witness"]["kind"], "unlabeled");
}

#[test]
fn labeled_compare_fails_for_even_shift() {
    let o = run(&["compare", "--labeled", &data("even.json"), &data("sft001.fw")]);
    assert_eq!(o.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["isomorphic"], false);
}

#[test]
fn word_bijection_table() {
    let o = run(&["compare", "--unlabeled", "--fn", "4", &data("even.json"), &data("sft001.fw")]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["f_n"]["map"]["0010"], "1010");
    assert_eq!(doc["f_n"]["map"].as_object().unwrap().len(), 12);
}

#[test]
fn all_witnesses_of_counter2() {
    let o = run(&["compare", "--lpc", "--all", &data("counter2-a.fw"), &data("counter2-b.fw")]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["witnesses"].as_array().unwrap().len(), 2);
    assert_eq!(doc["lifts_to_labeled"], false);
    assert_eq!(doc["pointwise"]["holds"], true);
    let o = run(&["compare", "--labeled", &data("counter2-a.fw"), &data("counter2-b.fw")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn witness_file_feeds_the_pointwise_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_string_lossy().into_owned();
    let o = run(&["compare", "--unlabeled", "--out", &out, &data("even.json"), &data("sft001.fw")]);
    assert_eq!(o.status.code(), Some(0));
    let witness = dir.path().join("witness.json");
    assert!(stdout(&o).contains("witness.json"));
    let w = witness.to_string_lossy().into_owned();
    let o = run(&["dynamics", &data("even.json"), "--lpc-check", &w, &data("sft001.fw")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let swapped = r#"{"vertex_map": {"F(∅)": "F(∅)", "F(1)": "F(01)", "F(01)": "F(1)"}}"#;
    let bad = dir.path().join("bad.json");
    fs::write(&bad, swapped).unwrap();
    let o = run(&["dynamics", &data("even.json"), "--lpc-check", &bad.to_string_lossy(), &data("sft001.fw")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cover_irreducibility_exit_codes() {
    let o = run(&["cover", &data("even.json"), "--check-irreducible"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 2);
    let o = run(&["cover", &data("sft001.fw"), "--check-irreducible"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Fischer cover only if irreducible"));
}

#[test]
fn dynamics_reports() {
    let o = run(&["dynamics", &data("golden.fw"), "--entropy", "12", "--emit", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["counts"][12], "377");
    let o = run(&["dynamics", &data("sft001.fw"), "--omega", "2", "3", "--emit", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["classes"].as_array().unwrap().len(), 3);
    let o = run(&["dynamics", &data("first.fw"), "--qmask"]);
    assert!(stdout(&o).contains("F(10): [10] m=1"));
    let o = run(&["dynamics", &data("golden.fw"), "--periodic", "5", "--emit", "json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["periodic_points"], serde_json::json!([1, 3, 4, 7, 11]));
    let o = run(&["dynamics", &data("even.json"), "--periodic", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not supported"));
}

#[test]
fn fock_relations_pass() {
    let o = run(&["fock", &data("sft001.fw"), "--truncate", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["fock", &data("sft001.fw"), "--truncate", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn examples_subcommand() {
    let o = run(&["examples", "counter2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("unlabeled isomorphisms: 2"));
    assert!(text.contains("labeled isomorphisms: 0"));
    assert!(!text.contains("counter1"));
    let o = run(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(", 0 failed"));
    let o = run(&["examples", "--seed", "3", "--emit", "json", "not-same"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["oracle_suite"]["languages"], 500);
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.fw");
    fs::write(&bad, "0 1\n101\n").unwrap();
    let o = run(&["fsg", "--forbidden", &bad.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at line 1"));
    assert!(stdout(&o).is_empty());

    let o = run(&["compare", "--unlabeled", "--emit", "dot", &data("first.fw"), &data("first.fw")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["compare", &data("first.fw"), &data("first.fw")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("compare"));
}

#[test]
fn right_convention_reverses_words() {
    let dir = tempfile::tempdir().unwrap();
    let right = dir.path().join("first-right.fw");
    fs::write(&right, "alphabet: 0 1\n101\n011\n").unwrap();
    let o = run(&["fsg", "--forbidden", &right.to_string_lossy(), "--convention", "right"]);
    assert_eq!(o.status.code(), Some(0));
    let g = FollowerSetGraph::from_json(&stdout(&o), Convention::Right).unwrap();
    assert!(g.same_structure(&build_fsg(&corpus::first()).unwrap()));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let classes: Vec<Vec<&str>> = doc["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect())
        .collect();
    assert!(classes.contains(&vec!["0", "00", "000", "100"]), "{classes:?}");
    assert!(classes.contains(&vec!["01", "001"]), "{classes:?}");
}

fn artifacts(dir: &Path) -> Vec<(PathBuf, Vec<u8>)> {
    let mut out: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).map(|p| {
        let bytes = fs::read(&p).unwrap();
        (PathBuf::from(p.file_name().unwrap()), bytes)
    }).collect();
    out.sort();
    out
}

#[test]
fn runs_are_deterministic() {
    let commands: Vec<Vec<String>> = vec![
        vec!["fsg".into(), "--forbidden".into(), data("counter1-a.fw")],
        vec!["fsg".into(), "--presentation".into(), data("even.json"), "--emit".into(), "dot".into()],
        vec!["compare".into(), "--unlabeled".into(), "--all".into(), "--fn".into(), "5".into(), data("counter1-a.fw"), data("counter1-b.fw")],
        vec!["cover".into(), data("even.json")],
        vec!["dynamics".into(), data("first.fw"), "--entropy".into(), "20".into()],
        vec!["fock".into(), data("first.fw"), "--truncate".into(), "4".into(), "--emit".into(), "json".into()],
        vec!["examples".into(), "first".into()],
    ];
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        for c in &commands {
            let mut args: Vec<&str> = c.iter().map(String::as_str).collect();
            let out = dir.path().to_string_lossy().into_owned();
            args.extend(["--out", &out]);
            let o = run(&args);
            assert!(o.status.code().unwrap() <= 1, "{args:?}: {}", stderr(&o));
        }
    }
    let (x, y) = (artifacts(a.path()), artifacts(b.path()));
    assert_eq!(x.len(), 7);
    assert_eq!(x, y);
}
