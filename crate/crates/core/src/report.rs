//! The JSON report written by the command-line tool, and the commands'
//! computational cores (everything except argument handling and printing).
//!
//! Every verdict is tri-state. Wall-clock timings live only in
//! `Report::timings`, so the `results` section of two runs with the same
//! seed and budgets is byte-identical.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Budget, Ctx};
use crate::corpus::{CorpusEntry, Expected};
use crate::error::{Error, Result};
use crate::fingerprint::Fingerprint;
use crate::gl52::Gl52Report;
use crate::group::PermGroup;
use crate::hall::{all_hall_classes, classify, k_induced, Classification, PiSet, Verdict, VerdictSource};
use crate::reduction::{Comparison, ReductionTrace};
use crate::suites::{self, SuiteResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: Option<InputDescriptor>,
    pub pi: Option<PiSet>,
    pub results: Results,
    /// Wall-clock milliseconds per phase.
    pub timings: BTreeMap<String, f64>,
    pub budgets: Budget,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Zoo,
    File,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDescriptor {
    pub kind: InputKind,
    pub name: String,
    pub degree: usize,
    pub order: u128,
}

impl InputDescriptor {
    pub fn new(kind: InputKind, name: &str, g: &PermGroup) -> InputDescriptor {
        InputDescriptor {
            kind,
            name: name.to_string(),
            degree: g.degree(),
            order: g.order_u128(),
        }
    }
}

/// The deterministic part of a report. Each command fills the fields it
/// computes.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionTrace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<KRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<Gl52Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zoo: Option<Vec<ZooListing>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HallClassRecord {
    pub class_size: usize,
    pub fingerprint: Fingerprint,
    pub digest: String,
    pub generators: Vec<Vec<u32>>,
}

impl HallClassRecord {
    pub fn new(ambient: &PermGroup, h: &PermGroup, class_size: usize) -> HallClassRecord {
        let fingerprint = Fingerprint::of(ambient, h);
        HallClassRecord {
            class_size,
            digest: fingerprint.digest(),
            fingerprint,
            generators: h.generators().iter().map(|x| x.images().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationRecord {
    pub order: u128,
    pub hall_order: u128,
    pub e: Verdict,
    pub c: Verdict,
    pub d: Verdict,
    pub k: Option<usize>,
    pub pi_separable: Verdict,
    pub source: Option<VerdictSource>,
    pub d_witness_order: Option<usize>,
    /// One record per class of π-Hall subgroups; `None` when the classes
    /// could not be listed within budget.
    pub hall_classes: Option<Vec<HallClassRecord>>,
}

impl ClassificationRecord {
    pub fn from_classification(c: &Classification, hall_classes: Option<Vec<HallClassRecord>>) -> Self {
        ClassificationRecord {
            order: c.order,
            hall_order: c.hall_order,
            e: Verdict::from_option(c.e),
            c: Verdict::from_option(c.c),
            d: Verdict::from_option(c.d),
            k: c.k,
            pi_separable: Verdict::from_option(c.pi_separable),
            source: Some(c.source),
            d_witness_order: c.d_witness_order,
            hall_classes,
        }
    }

    /// The record of an analysis that ran out of budget.
    pub fn exceeded(g: &PermGroup, pi: &PiSet) -> Self {
        let order = g.order_u128();
        ClassificationRecord {
            order,
            hall_order: crate::hall::pi_part(order, pi),
            e: Verdict::BudgetExceeded,
            c: Verdict::BudgetExceeded,
            d: Verdict::BudgetExceeded,
            k: None,
            pi_separable: Verdict::BudgetExceeded,
            source: None,
            d_witness_order: None,
            hall_classes: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KRecord {
    pub normal: String,
    pub normal_order: u128,
    pub k_induced: usize,
    pub k_total: usize,
    /// One record per `A`-class of induced Hall subgroups.
    pub induced: Vec<HallClassRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusRow {
    pub index: usize,
    pub name: String,
    pub pi: PiSet,
    pub order: u128,
    pub expected: Expected,
    pub e: Verdict,
    pub c: Verdict,
    pub d: Verdict,
    pub k: Option<usize>,
    pub reduction: Verdict,
    pub oracle: Verdict,
    pub agree: Option<bool>,
    /// Error text when the comparison failed for a reason other than budget.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusRecord {
    pub rows: Vec<CorpusRow>,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZooListing {
    pub name: String,
    pub degree: usize,
    pub order: u128,
}

impl Report {
    pub fn new(command: &str, ctx: &Ctx) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: None,
            pi: None,
            results: Results::default(),
            timings: BTreeMap::new(),
            budgets: ctx.budget.clone(),
            seed: ctx.seed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable") + "\n"
    }

    /// The `results` section alone, as compared across runs.
    pub fn results_json(&self) -> String {
        serde_json::to_string_pretty(&self.results).expect("results are serializable")
    }
}

pub fn parse_report(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        generator: None,
        msg: e.to_string(),
    })
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Classification plus the Hall classes. A budget overrun in the
/// classification yields all-`BudgetExceeded` verdicts and `Ok(false)` in
/// the second component; listing the classes is optional and skipped when
/// over budget.
pub fn analyze(g: &PermGroup, pi: &PiSet, ctx: &Ctx, timings: &mut BTreeMap<String, f64>) -> Result<(ClassificationRecord, bool)> {
    let t = Instant::now();
    let class = match classify(g, pi, ctx) {
        Ok(c) => c,
        Err(e) if e.is_budget() => {
            timings.insert("classify".into(), ms(t));
            return Ok((ClassificationRecord::exceeded(g, pi), false));
        }
        Err(e) => return Err(e),
    };
    timings.insert("classify".into(), ms(t));
    let t = Instant::now();
    let halls = match all_hall_classes(g, pi, ctx) {
        Ok(set) => Some(
            set.class_reps
                .iter()
                .zip(&set.class_sizes)
                .map(|(h, &s)| HallClassRecord::new(g, h, s))
                .collect(),
        ),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    timings.insert("hall_classes".into(), ms(t));
    Ok((ClassificationRecord::from_classification(&class, halls), true))
}

/// `k_π^G(A)` with fingerprints of the induced classes.
pub fn k_record(g: &PermGroup, a: &PermGroup, label: &str, pi: &PiSet, ctx: &Ctx) -> Result<KRecord> {
    let k = k_induced(g, a, pi, ctx)?;
    let mut induced: Vec<HallClassRecord> = k.induced_reps.iter().map(|m| HallClassRecord::new(a, m, 0)).collect();
    induced.sort_by(|x, y| x.fingerprint.cmp(&y.fingerprint));
    Ok(KRecord {
        normal: label.to_string(),
        normal_order: a.order_u128(),
        k_induced: k.k_induced,
        k_total: k.k_total,
        induced,
    })
}

/// Runs every corpus entry and every suite on a pool of `jobs` workers
/// (`0` means one per core). Rows and suites are ordered by manifest index.
pub fn run_corpus(entries: &[CorpusEntry], ctx: &Ctx, jobs: usize, timings: &mut BTreeMap<String, f64>) -> Result<CorpusRecord> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        let t = Instant::now();
        let facts = suites::prepare(entries, ctx)?;
        timings.insert("prepare".into(), ms(t));
        let t = Instant::now();
        let comparisons = suites::compare_all(&facts, ctx);
        timings.insert("compare".into(), ms(t));
        let rows = entries
            .par_iter()
            .zip(&facts)
            .zip(&comparisons)
            .enumerate()
            .map(|(index, ((entry, f), cmp))| {
                let c = &f.classification;
                let (reduction, oracle, agree, error) = match cmp {
                    Ok(x) => (x.reduction_verdict, x.oracle_verdict, x.agree, None),
                    Err(e) if e.is_budget() => (Verdict::BudgetExceeded, Verdict::BudgetExceeded, None, None),
                    Err(e) => (Verdict::BudgetExceeded, Verdict::BudgetExceeded, None, Some(e.to_string())),
                };
                CorpusRow {
                    index,
                    name: f.name.clone(),
                    pi: f.pi.clone(),
                    order: f.group.order_u128(),
                    expected: entry.expected,
                    e: Verdict::from_option(c.e),
                    c: Verdict::from_option(c.c),
                    d: Verdict::from_option(c.d),
                    k: c.k,
                    reduction,
                    oracle,
                    agree,
                    error,
                }
            })
            .collect();
        let mut suite_results = vec![
            suites::manifest_agreement(entries, &facts),
            suites::reduction_agreement(&facts, &comparisons),
        ];
        for f in suites::FACT_SUITES {
            let t = Instant::now();
            let r = f(&facts, ctx);
            timings.insert(format!("suite {}", r.key), ms(t));
            suite_results.push(r);
        }
        let passed = suite_results.iter().all(SuiteResult::passed);
        Ok(CorpusRecord {
            rows,
            suites: suite_results,
            passed,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn analysis_report_round_trips() {
        let ctx = Ctx::new(Budget::default(), 1);
        let g = zoo::alt(5);
        let pi = PiSet::parse("2,3").unwrap();
        let mut r = Report::new("analyze", &ctx);
        r.input = Some(InputDescriptor::new(InputKind::Zoo, "alt5", &g));
        r.pi = Some(pi.clone());
        let (rec, complete) = analyze(&g, &pi, &ctx, &mut r.timings).unwrap();
        assert!(complete);
        assert_eq!(rec.c, Verdict::True);
        assert_eq!(rec.k, Some(1));
        r.results.classification = Some(rec);
        let text = r.to_json();
        assert_eq!(parse_report(&text).unwrap(), r);
    }

    #[test]
    fn budget_overrun_is_not_false() {
        let mut ctx = Ctx::new(Budget::default(), 1);
        ctx.budget.order = 10;
        let g = zoo::alt(5);
        let pi = PiSet::parse("2,3").unwrap();
        let (rec, complete) = analyze(&g, &pi, &ctx, &mut BTreeMap::new()).unwrap();
        assert!(!complete);
        assert_eq!(rec.c, Verdict::BudgetExceeded);
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"c\":\"budget_exceeded\""));
    }

    #[test]
    fn k_for_the_whole_group_counts_every_class() {
        let ctx = Ctx::new(Budget::default(), 1);
        let g = zoo::gl(3, 2).unwrap();
        let pi = PiSet::parse("2,3").unwrap();
        let k = k_record(&g, &g, "whole", &pi, &ctx).unwrap();
        assert_eq!(k.k_induced, k.k_total);
        assert_eq!(k.k_total, 2);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let ctx = Ctx::default();
        let r = Report::new("zoo", &ctx);
        let mut v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        v["extra"] = serde_json::json!(1);
        assert!(matches!(parse_report(&v.to_string()), Err(Error::Parse { .. })));
    }
}
