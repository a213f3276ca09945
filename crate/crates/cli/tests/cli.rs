use std::io::Write;
use std::process::{Command, Output, Stdio};

use seifert_core::symbol::{normalize_symbol, render_symbol};
use seifert_core::parse_symbol;

const CORPUS: &str = include_str!("data/corpus.txt");
const GOLDEN: &str = include_str!("data/corpus.jsonl");
const SCHEMA: &str = include_str!("../../../docs/report-schema.json");

fn seifert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seifert"))
        .args(args)
        .env_remove("SEIFERT_MAX_COSETS")
        .output()
        .unwrap()
}

fn batch(input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seifert"))
        .args(["report", "--json", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check(args: &[&str], code: i32, expect: &str) {
    let o = seifert(args);
    assert_eq!(o.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim_end(), expect, "{args:?}");
}

#[test]
fn golden_reports() {
    let o = batch(CORPUS);
    assert!(o.status.success());
    assert_eq!(stdout(&o), GOLDEN);
    assert_eq!(batch(CORPUS).stdout, o.stdout);
}

#[test]
fn reports_match_schema() {
    let schema: serde_json::Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let keys: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|k| k.as_str().unwrap()).collect();
    for line in GOLDEN.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{line}: {errors:?}");
        // fixed key order
        let mut last = 0;
        for k in &keys {
            let at = line.find(&format!("\"{k}\":")).unwrap();
            assert!(at >= last, "{k} out of order in {line}");
            last = at;
        }
    }
}

#[test]
fn corpus_round_trips() {
    for (line, json) in CORPUS.lines().zip(GOLDEN.lines()) {
        let s = parse_symbol(line).unwrap();
        assert_eq!(render_symbol(&s), line);
        let v: serde_json::Value = serde_json::from_str(json).unwrap();
        let normalized = parse_symbol(v["normalized"].as_str().unwrap()).unwrap();
        assert_eq!(normalized, normalize_symbol(&s).unwrap(), "{line}");
    }
}

#[test]
fn symbol_commands() {
    check(&["equiv", "(O,o,0|-1,(2,1),(3,1))", "(O,o,0|-1,(2,1),(3,2))", "--unoriented"], 0, "equivalent");
    check(&["equiv", "(O,o,0|-1,(2,1),(3,1))", "(O,o,0|-1,(2,1),(3,2))"], 1, "distinct");
    check(&["equiv", "(N,o,1|(0,0))", "(N,o,1|(1,0))"], 1, "distinct");
    check(&["normalize", "(O,o,0 | 0, (3,7))"], 0, "(O,o,0 | 2, (3,1))");
    check(&["reverse", "(O,o,0 | -1, (2,1), (3,1))"], 0, "(O,o,0 | -1, (2,1), (3,2))");
    check(&["cover", "double", "(N,n,I,1 | (0,0), (3,1))"], 0, "(O,o,0 | -1, (3,1), (3,2))");
    check(
        &["cover", "fiberless", "(O,o,0|-1,(2,1),(3,1),(7,1))", "--sheets", "84"],
        0,
        "(O,o,2 | -2)\norbit euler characteristic -2",
    );
}

#[test]
fn group_commands() {
    check(&["group", "order", "(O,o,0|1,(2,1),(3,1),(5,1))", "--max-cosets", "100000"], 0, "120");
    check(&["group", "h1", "(O,o,0|1,(2,1),(3,1),(5,1))"], 0, "0");
    check(&["group", "fuchsian", "(O,o,0|1,(2,1),(3,1))"], 0, "<c1, c2 | c1^2, c2^3, c1 c2>");
    let o = seifert(&["group", "order", "(O,o,1|0)", "--max-cosets", "2000"]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_seifert"))
        .args(["group", "order", "(O,o,0|1,(2,1),(3,1),(5,1))"])
        .env("SEIFERT_MAX_COSETS", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn local_calculators() {
    check(&["lens", "normalize", "7", "-2"], 0, "L(7,2)");
    check(&["lens", "normalize", "0", "1"], 0, "S2xS1");
    check(&["lens", "equiv", "7", "2", "7", "3"], 0, "equivalent");
    check(&["lens", "equiv", "7", "1", "7", "3"], 1, "distinct");
    check(&["fst", "equiv", "1", "5", "4", "5"], 1, "distinct");
    check(&["fst", "equiv", "1", "5", "4", "5", "--reverse"], 0, "equivalent");
    check(&["fst", "equiv", "1", "5", "6", "5", "--any"], 0, "equivalent");
    check(&["fst", "lift", "3", "2", "5"], 0, "components 1\nlifted 1/5");
    check(&["fst", "lift", "5", "2", "5"], 0, "components 5\nlifted 0/1");
}

#[test]
fn exit_codes() {
    for (args, code) in [
        (vec!["normalize", "(O,o,0 | 1, (4,2))"], 2),
        (vec!["normalize", "(O,q,0 | 1)"], 2),
        (vec!["reverse", "(N,o,1 | (0,0))"], 3),
        (vec!["cover", "fiberless", "(O,o,0|-1,(2,1),(3,1),(5,1))", "--sheets", "30"], 3),
        (vec!["cover", "double", "(O,o,1|0)"], 3),
        (vec!["lens", "normalize", "6", "2"], 2),
        (vec!["fst", "lift", "0", "1", "2"], 2),
        (vec!["frobnicate"], 2),
    ] {
        let o = seifert(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn report_flags() {
    let o = seifert(&["report", "(O,o,0|0)", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["recognition"], "S2xS1");
    assert_eq!(v["predicates"]["irreducible"], false);
    let text = stdout(&seifert(&["report", "(O,o,0|0)"]));
    assert!(text.contains("recognition:      S2xS1"));
    let o = batch("(O,o,0|0)\nnonsense\n\n(O,o,1|0)\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
