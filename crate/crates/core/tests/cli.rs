//! Runs the built binary and checks exit codes, output and report files.

use std::path::Path;
use std::process::{Command, Output};

use hallcpi::hall::Verdict;
use hallcpi::report::parse_report;

fn hallcpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hallcpi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hallcpi(args).status.code().expect("exit code")
}

fn report_at(path: &Path) -> hallcpi::report::Report {
    parse_report(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\n  \"name\": \"bad\",\n  \"degree\": 3,\n  \"generators\": [\n    [1, 2, 0],\n    [0, 0, 1]\n  ]\n}\n",
    )
    .unwrap();
    let out = hallcpi(&["analyze", bad.to_str().unwrap(), "--pi", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 6") && err.contains("generator 1"), "{err}");

    assert_eq!(code(&["analyze", "alt5", "--pi", "2,3"]), 0);
    assert_eq!(code(&["analyze", "alt5", "--pi", "2,x"]), 4);
    assert_eq!(code(&["analyze", "alt5", "--pi", "1"]), 4);
    assert_eq!(code(&["analyze", "sym6", "--pi", "2,3", "--budget-order", "100"]), 3);
    assert_eq!(code(&["k", "sym5", "--normal", "sym4x", "--pi", "2,3"]), 6);
    assert_eq!(code(&["k", "sym5", "--pi", "2,3", "--normal", "minimal:4"]), 6);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn not_normal_subgroup_file_exits_6() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("sub.json");
    std::fs::write(&sub, "{\"name\": \"t\", \"degree\": 5, \"generators\": [[1, 0, 2, 3, 4]]}").unwrap();
    assert_eq!(code(&["k", "sym5", "--normal", sub.to_str().unwrap(), "--pi", "2,3"]), 6);
}

#[test]
fn json_report_round_trips_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        assert_eq!(code(&["analyze", "gl32", "--pi", "2,3", "--json", p.to_str().unwrap()]), 0);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    let ra = parse_report(&text).unwrap();
    assert_eq!(ra.to_json(), text);
    let rb = report_at(&b);
    assert_eq!(ra.results_json(), rb.results_json());
    let c = ra.results.classification.unwrap();
    assert_eq!((c.c, c.k), (Verdict::False, Some(2)));
    assert!(text.contains("\"c\": \"false\""));
}

#[test]
fn emitted_group_files_analyze_like_the_zoo_name() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("psl2_7.json");
    assert_eq!(code(&["zoo", "emit", "psl2_7", "--out", file.to_str().unwrap()]), 0);
    let from_file = dir.path().join("f.json");
    let from_zoo = dir.path().join("z.json");
    assert_eq!(code(&["analyze", file.to_str().unwrap(), "--pi", "2,3", "--json", from_file.to_str().unwrap()]), 0);
    assert_eq!(code(&["analyze", "psl2_7", "--pi", "2,3", "--json", from_zoo.to_str().unwrap()]), 0);
    assert_eq!(
        report_at(&from_file).results.classification,
        report_at(&from_zoo).results.classification
    );
}

#[test]
fn reduce_with_oracle_comparison() {
    let out = hallcpi(&["reduce", "sym5", "--pi", "2,3", "--compare-oracle", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let r = parse_report(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let cmp = r.results.comparison.unwrap();
    assert_eq!(cmp.agree, Some(true));
    assert_eq!(r.results.reduction.unwrap().verdict, Verdict::True);
}

#[test]
fn example_command_succeeds() {
    let out = hallcpi(&["example-gl52"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[unverified] k_exhaustive"), "{text}");
    assert!(!text.contains("FAILED"));
}

#[test]
fn solvable_manifest_has_dominance_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("solvable.json");
    let records: Vec<_> = hallcpi::corpus::frozen_manifest()
        .unwrap()
        .into_iter()
        .filter(|r| {
            let g = hallcpi::corpus::build_named(&r.name).unwrap();
            hallcpi::structure::derived_series(&g).last().unwrap().is_trivial()
        })
        .collect();
    assert!(records.len() >= 5);
    std::fs::write(&path, hallcpi::corpus::manifest_to_json(&records)).unwrap();
    let json = dir.path().join("out.json");
    assert_eq!(
        code(&["corpus", "--manifest", path.to_str().unwrap(), "--json", json.to_str().unwrap()]),
        0
    );
    let rec = report_at(&json).results.corpus.unwrap();
    assert_eq!(rec.rows.len(), records.len());
    assert!(rec.rows.iter().all(|r| r.d == Verdict::True));
    assert!(rec.passed);
}
