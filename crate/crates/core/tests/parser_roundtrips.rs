//! Replays the checked-in fuzz seeds through the fuzz targets' assertions
//! and throws random text at the same parsers.

use std::path::PathBuf;

use hallcpi::hall::PiSet;
use hallcpi::io::{parse_group_file, GroupFile};
use hallcpi::report::parse_report;
use hallcpi::selector::Selector;
use proptest::prelude::*;

fn group_json(data: &str) {
    if let Ok((file, g)) = parse_group_file(data) {
        assert_eq!(g.degree(), file.degree);
        let again = GroupFile::from_group(&file.name, &g).to_json();
        let (back, _) = parse_group_file(&again).expect("emitted group files parse");
        assert_eq!(back, file);
    }
}

fn pi_csv(data: &str) {
    if let Ok(pi) = PiSet::parse(data) {
        assert_eq!(PiSet::parse(&pi.to_string()).expect("display parses"), pi);
    }
}

fn subgroup_selector(data: &str) {
    if let Ok(sel) = data.parse::<Selector>() {
        assert_eq!(sel.to_string().parse::<Selector>().expect("display parses"), sel);
    }
}

fn report_json(data: &str) {
    if let Ok(report) = parse_report(data) {
        assert_eq!(parse_report(&report.to_json()).expect("emitted reports parse"), report);
    }
}

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn fuzz_seeds_replay() {
    let mut parsed = 0;
    for s in seeds("group_json") {
        parsed += parse_group_file(&s).is_ok() as usize;
        group_json(&s);
    }
    assert!(parsed >= 2);
    for s in seeds("pi_csv") {
        pi_csv(&s);
    }
    for s in seeds("subgroup_selector") {
        assert!(s.parse::<Selector>().is_ok(), "{s}");
        subgroup_selector(&s);
    }
    for s in seeds("report_json") {
        parse_report(&s).unwrap();
        report_json(&s);
    }
}

proptest! {
    #[test]
    fn random_pi_text(s in "[0-9, ]{0,24}") {
        pi_csv(&s);
    }

    #[test]
    fn random_selectors(s in "[a-z0-9:/._ -]{0,20}") {
        subgroup_selector(&s);
    }

    #[test]
    fn random_group_files(degree in 1usize..6, gens in prop::collection::vec(prop::collection::vec(0u32..6, 0..7), 0..3)) {
        let text = format!(
            "{{\"name\": \"r\", \"degree\": {degree}, \"generators\": {}}}",
            serde_json::to_string(&gens).unwrap()
        );
        group_json(&text);
    }

    #[test]
    fn mutated_seed_text(idx in 0usize..4, cut in 0usize..4000, junk in "[\\[\\]{}\",:0-9a-z ]{0,6}") {
        let pool = seeds("report_json");
        let s = &pool[idx % pool.len()];
        let cut = cut.min(s.len());
        let cut = (0..=cut).rev().find(|&i| s.is_char_boundary(i)).unwrap();
        let mutated = format!("{}{}{}", &s[..cut], junk, &s[cut..]);
        report_json(&mutated);
        group_json(&mutated);
    }
}
