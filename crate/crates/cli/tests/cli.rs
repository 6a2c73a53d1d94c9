use std::fs;
use std::path::Path;

use proptest::prelude::*;
use satblow::io::parse_pbg;
use satblow_cli::{run, EXIT_BUDGET, EXIT_MALFORMED, EXIT_OK};
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", self.stdout))
    }
}

fn satblow(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("satblow").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_verify_k4() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.pbg");
    let r = satblow(&["construct", "--family", "k4", "--n", "5", "-o", path_str(&file)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(r.json()["edges"], 69);
    let text = fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("# family=k4 n=5 edges=69\n"));
    assert_eq!(parse_pbg(&text).unwrap().edge_count(), 69);

    let r = satblow(&["verify", "--mode", "sat", "--graph", path_str(&file)]);
    assert_eq!(r.code, EXIT_OK);
    let doc = r.json();
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["witness"], Value::Null);
    assert_eq!(doc["count"], "0");

    let r = satblow(&["verify", "--mode", "k4lemmas", "--graph", path_str(&file)]);
    let checks = r.json()["checks"].as_array().unwrap().clone();
    assert_eq!(checks.len(), 3);
    assert_eq!(checks[2]["outcome"], "not_applicable");
}

#[test]
fn construct_round_trips_through_stdout() {
    let r = satblow(&["construct", "--family", "tree-exsat", "--pattern", "p4", "--n", "4"]);
    assert_eq!(r.code, EXIT_OK);
    let g = parse_pbg(&r.stdout).unwrap();
    assert_eq!(g.edge_count(), 12);
    assert!(satblow::is_extra_saturated(&g).is_ok());
}

#[test]
fn count_on_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("empty-k3-2.pbg");
    fs::write(&file, "blowup 3 3 2\np 1 2\np 1 3\np 2 3\n").unwrap();
    let r = satblow(&["count", "--graph", path_str(&file)]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout.trim(), r#"{"count":"0"}"#);
}

#[test]
fn failing_verdicts_still_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("full.pbg");
    let mut text = String::from("blowup 2 1 2\np 1 2\n");
    for a in 1..=2 {
        for b in 1..=2 {
            text.push_str(&format!("e 1.{a} 2.{b}\n"));
        }
    }
    fs::write(&file, text).unwrap();
    let r = satblow(&["verify", "--mode", "free", "--graph", path_str(&file)]);
    assert_eq!(r.code, EXIT_OK);
    let doc = r.json();
    assert_eq!(doc["status"], "not_free");
    assert_eq!(doc["count"], "4");
    assert_eq!(doc["witness"]["copy"], serde_json::json!(["1.1", "2.1"]));

    let empty = dir.path().join("empty.pbg");
    fs::write(&empty, "blowup 3 2 2\np 1 2\np 2 3\n").unwrap();
    let doc = satblow(&["verify", "--mode", "exsat", "--graph", path_str(&empty)]).json();
    assert_eq!(doc["status"], "not_extra_saturated");
    assert_eq!(doc["witness"]["non_edge"], serde_json::json!(["1.1", "2.1"]));
}

#[test]
fn solve_reports_value_and_writes_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.pbg");
    let r = satblow(&[
        "solve",
        "--mode",
        "sat",
        "--pattern",
        "k3",
        "--n",
        "2",
        "-o",
        path_str(&file),
    ]);
    assert_eq!(r.code, EXIT_OK);
    let doc = r.json();
    assert_eq!(doc["value"], 6);
    let g = parse_pbg(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g.edge_count(), 6);
    assert!(satblow::is_partite_saturated(&g).is_ok());

    let plain = satblow(&[
        "solve",
        "--mode",
        "exsat",
        "--pattern",
        "p3",
        "--n",
        "3",
        "--no-symmetry",
    ]);
    assert_eq!(plain.json()["value"], 6);
    assert_eq!(plain.json()["group_size"], 1);
}

#[test]
fn solve_with_pattern_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cherry.pat");
    fs::write(&file, "# a path on three vertices\npattern 3 2\ne 1 2\ne 2 3\n").unwrap();
    let r = satblow(&["solve", "--mode", "sat", "--pattern", path_str(&file), "--n", "2"]);
    assert_eq!(r.json()["value"], 4);
}

#[test]
fn exhausted_budget_exits_three() {
    let r = satblow(&["solve", "--mode", "sat", "--pattern", "k3", "--n", "4", "--budget", "0"]);
    assert_eq!(r.code, EXIT_BUDGET);
    let doc = r.json();
    assert_eq!(doc["value"], "UNKNOWN");
    assert!(doc["upper_bound"].as_u64().unwrap() >= 18);

    let r = satblow(&["mvalue", "--r", "4", "--s", "3", "--max-vertices", "5"]);
    assert_eq!(r.code, EXIT_BUDGET);
    assert_eq!(r.json()["value"], "UNKNOWN");
}

#[test]
fn mvalue_and_bounds() {
    let doc = satblow(&["mvalue", "--r", "3", "--s", "3"]).json();
    assert_eq!(doc["value"], 4);
    let doc = satblow(&["bounds", "--r", "4", "--n", "10"]).json();
    assert_eq!(doc["lower"], 80);
    assert_eq!(doc["upper"], 180);
}

#[test]
fn table_rows() {
    let formulas = |args: &[&str]| -> Vec<i64> {
        satblow(args).json()["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| {
                assert_eq!(row["verified"], true);
                assert_eq!(row["formula_value"], row["construction_edges"]);
                row["formula_value"].as_i64().unwrap()
            })
            .collect()
    };
    assert_eq!(
        formulas(&["table", "--family", "k4", "--n-from", "3", "--n-to", "6"]),
        [33, 51, 69, 87]
    );
    assert_eq!(
        formulas(&["table", "--family", "star", "--r", "3", "--n-from", "2", "--n-to", "4"]),
        [8, 18, 32]
    );
    assert_eq!(
        formulas(&[
            "table",
            "--family",
            "tree-exsat",
            "--pattern",
            "p3",
            "--n-from",
            "4",
            "--n-to",
            "6"
        ]),
        [8, 10, 12]
    );
    let doc = satblow(&[
        "table", "--family", "star", "--r", "2", "--n-from", "2", "--n-to", "3", "--solver",
    ])
    .json();
    let solved: Vec<_> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["solver_value"].clone())
        .collect();
    assert_eq!(solved, [4, 9]);
}

#[test]
fn text_output_has_the_same_values() {
    let r = satblow(&["--format", "text", "bounds", "--r", "4", "--n", "10"]);
    assert!(r.stdout.contains("lower: 80\n") && r.stdout.contains("upper: 180\n"));
    let r = satblow(&[
        "table", "--family", "k4", "--n-from", "3", "--n-to", "4", "--format", "text",
    ]);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("formula_value"));
    assert!(lines[1].contains("33") && lines[2].contains("51"));
}

#[test]
fn thread_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("big.pbg");
    // Enough non-edges to use the parallel scan.
    let r = satblow(&["construct", "--family", "k4", "--n", "30", "-o", path_str(&file)]);
    assert_eq!(r.code, EXIT_OK);
    for mode in ["sat", "exsat"] {
        let one = satblow(&["--threads", "1", "verify", "--mode", mode, "--graph", path_str(&file)]);
        let four = satblow(&["--threads", "4", "verify", "--mode", mode, "--graph", path_str(&file)]);
        assert_eq!(one.stdout, four.stdout);
    }
    // Drop one edge so the scan has to report the least failing non-edge.
    let text = fs::read_to_string(&file).unwrap();
    let last = text.lines().rfind(|l| l.starts_with("e ")).unwrap().to_string();
    fs::write(&file, text.replace(&format!("{last}\n"), "")).unwrap();
    let one = satblow(&["--threads", "1", "verify", "--mode", "sat", "--graph", path_str(&file)]);
    let four = satblow(&["--threads", "4", "verify", "--mode", "sat", "--graph", path_str(&file)]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.json()["status"], "not_saturated");
}

#[test]
fn malformed_flags_exit_two() {
    for args in [
        &["construct", "--family", "nope", "--n", "3"][..],
        &["construct", "--family", "k4"],
        &["construct", "--family", "two-connected", "--pattern", "c4", "--n", "4"],
        &["construct", "--family", "star", "--n", "3"],
        &["solve", "--mode", "sat", "--pattern", "no-such-pattern", "--n", "2"],
        &[
            "solve",
            "--mode",
            "sat",
            "--pattern",
            "k3",
            "--n",
            "2",
            "--budget",
            "-1",
        ],
        &["solve", "--mode", "sat", "--pattern", "k5", "--n", "5"],
        &["verify", "--mode", "sat", "--graph", "/nonexistent.pbg"],
        &["mvalue", "--r", "2", "--s", "3"],
        &["--threads", "0", "count", "--graph", "x"],
        &["frobnicate"],
    ] {
        let r = satblow(args);
        assert_eq!(r.code, EXIT_MALFORMED, "{args:?}");
        assert!(r.stdout.is_empty(), "{args:?}");
        assert!(!r.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(satblow(&["--help"]).code, EXIT_OK);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.pbg");
    fs::write(&file, "# comment\nblowup 3 2 2\np 1 2\np 2 3\ne 1.1 3.1\n").unwrap();
    let r = satblow(&["count", "--graph", path_str(&file)]);
    assert_eq!(r.code, EXIT_MALFORMED);
    assert!(r.stderr.contains("line 5"), "{}", r.stderr);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fuzzed_graph_files_never_crash(lines in proptest::collection::vec(
        prop_oneof![
            Just("blowup 3 3 2".to_string()),
            Just("p 1 2".to_string()),
            Just("p 2 3".to_string()),
            Just("p 1 3".to_string()),
            (0usize..5, 0usize..4, 0usize..5, 0usize..4).prop_map(|(a, i, b, j)| format!("e {a}.{i} {b}.{j}")),
            "[ -~]{0,12}",
        ],
        0..8,
    )) {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("fuzz.pbg");
        fs::write(&file, lines.join("\n")).unwrap();
        let r = satblow(&["verify", "--mode", "sat", "--graph", path_str(&file)]);
        prop_assert!(r.code == EXIT_OK || r.code == EXIT_MALFORMED);
        if r.code == EXIT_OK {
            prop_assert!(r.json().get("status").is_some());
        } else {
            prop_assert!(r.stderr.contains("line "), "{}", r.stderr);
        }
    }
}
