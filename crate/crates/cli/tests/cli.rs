use std::process::{Command, Output};

use serde_json::Value;

fn adams(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adams"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = adams(args);
    assert!(out.status.success(), "{:?}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn matrix(doc: &Value) -> Vec<Vec<i64>> {
    doc["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap().parse().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn compute_examples() {
    let u2 = json(&["compute", "--group", "U", "--rank", "2", "--l", "2", "--format", "json"]);
    assert_eq!(matrix(&u2), vec![vec![4, 0], vec![-2, 2]]);
    assert_eq!(u2["group"], "U(2)");
    assert_eq!(u2["rank"], 2);
    assert_eq!(u2["l"], 2);
    assert_eq!(u2["basis"], serde_json::json!(["d(L^1 s_2)", "d(L^2 s_2)"]));

    let g2 = json(&["compute", "--group", "G2", "--l", "2"]);
    assert_eq!(matrix(&g2), vec![vec![12, -208], vec![-2, 56]]);
    assert_eq!(g2["basis"], serde_json::json!(["d(rho1)", "d(rho2)"]));

    let sp1 = json(&["compute", "--group", "Sp", "--rank", "1", "--l", "3"]);
    assert_eq!(matrix(&sp1), vec![vec![9]]);
}

#[test]
fn json_entries_are_strings_and_round_trip() {
    let doc = json(&["compute", "--group", "SpinEven", "--rank", "5", "--l", "7"]);
    for row in doc["matrix"].as_array().unwrap() {
        for x in row.as_array().unwrap() {
            assert!(x.is_string());
        }
    }
    let text = serde_json::to_string(&doc).unwrap();
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(doc["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn large_entries_survive_serialization() {
    // Entries beyond 64 bits must come through unchanged.
    let doc = json(&["compute", "--group", "U", "--rank", "12", "--l", "1000"]);
    let big = doc["matrix"][5][6].as_str().unwrap();
    assert!(big.trim_start_matches('-').len() > 20, "{big}");
    assert!(big.parse::<i64>().is_err());
}

#[test]
fn csv_layout() {
    let out = adams(&["compute", "--group", "U", "--rank", "2", "--l", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "d(L^1 s_2),d(L^2 s_2)\n4,0\n-2,2\n");
}

#[test]
fn pretty_output_mentions_labels() {
    let out = adams(&["compute", "--group", "SpinOdd", "--rank", "2", "--l", "2", "--format", "pretty"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Spin(5)"));
    assert!(text.contains("d(S)"));
    assert!(text.contains("-16"));
}

#[test]
fn eigen_examples() {
    let e2 = json(&["eigen", "--rank", "2"]);
    assert_eq!(e2["l"], Value::Null);
    assert_eq!(e2["eigen"]["levels"], serde_json::json!([0, 1]));
    assert_eq!(e2["eigen"]["exponents"], serde_json::json!([2, 1]));
    assert_eq!(e2["eigen"]["eigenvalues"], serde_json::json!(["l^2", "l^1"]));
    assert_eq!(e2["eigen"]["vectors"], serde_json::json!([["1", "-1"], ["0", "2"]]));

    let e3 = json(&["eigen", "--rank", "3", "--l", "2"]);
    assert_eq!(e3["eigen"]["eigenvalues"], serde_json::json!(["8", "4", "2"]));
    assert_eq!(matrix(&e3).len(), 3);

    let e1 = json(&["eigen", "--rank", "1"]);
    assert_eq!(e1["eigen"]["vectors"], serde_json::json!([["1"]]));
    assert_eq!(e1["eigen"]["exponents"], serde_json::json!([1]));

    let e4 = json(&["eigen", "--rank", "4"]);
    assert_eq!(e4["eigen"]["vectors"][2], serde_json::json!(["4/3", "2/3", "4/3", "-22/3"]));
}

#[test]
fn mu_examples() {
    for (args, want) in [
        (["3", "2", "1", "1"], "3"),
        (["3", "1", "2", "2"], "1"),
        (["3", "3", "2", "2"], "6"),
    ] {
        let out = adams(&[&["mu"][..], &args[..]].concat());
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), want);
        let checked = adams(&[&["mu"][..], &args[..], &["--check"][..]].concat());
        assert_eq!(stdout(&checked).trim(), want);
    }
    let neg = adams(&["mu", "2", "2", "1", "-1"]);
    assert!(neg.status.success());
    assert_eq!(stdout(&neg).trim(), "0");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| adams(args).status.code();
    assert_eq!(code(&["compute", "--group", "Foo", "--rank", "2", "--l", "2"]), Some(2));
    assert_eq!(code(&["compute", "--group", "SU", "--rank", "1", "--l", "2"]), Some(2));
    assert_eq!(code(&["compute", "--group", "SpinEven", "--rank", "2", "--l", "2"]), Some(2));
    assert_eq!(code(&["compute", "--group", "U", "--l", "2"]), Some(2));
    assert_eq!(code(&["compute", "--group", "U", "--rank", "2", "--l", "0"]), Some(2));
    assert_eq!(code(&["eigen", "--rank", "0"]), Some(2));
    assert_eq!(code(&["mu", "0", "2", "1", "1"]), Some(2));
    assert_eq!(code(&["mu", "2", "2", "-1", "1"]), Some(2));

    let bad = adams(&["mu", "0", "2", "1", "1"]);
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "counts", "--max-rank", "8", "--max-l", "6"][..],
        &["verify", "--suite", "matrices", "--max-rank", "5", "--max-l", "4"][..],
        &["verify", "--suite", "eigen", "--max-rank", "8"][..],
    ] {
        let out = adams(args);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        let text = stdout(&out);
        assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    }
}
