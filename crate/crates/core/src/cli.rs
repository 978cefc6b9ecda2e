//! Command-line front end: argument parsing, human-readable output and the
//! mapping from errors to exit codes.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::config::{Budget, Ctx};
use crate::corpus::{self, CORPUS};
use crate::error::{Error, Result};
use crate::gl52::{run_gl52_example, ClaimStatus};
use crate::group::PermGroup;
use crate::hall::{PiSet, Verdict};
use crate::io::{parse_group_file, GroupFile};
use crate::reduction::{compare_with_oracle, cpi_reduce};
use crate::report::{self, ClassificationRecord, CorpusRecord, InputDescriptor, InputKind, Report, ZooListing};
use crate::selector::Selector;
use crate::suites::EXTRA_PRODUCTS;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PI: i32 = 4;
pub const EXIT_FAILED: i32 = 5;
pub const EXIT_SUBGROUP: i32 = 6;

/// Decide E_π, C_π and D_π for permutation groups.
#[derive(Debug, Parser)]
#[command(name = "hallcpi", version, about)]
pub struct Cli {
    /// Comma-separated primes, e.g. 2,3.
    #[arg(long, global = true)]
    pub pi: Option<String>,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Backtrack nodes allowed per search.
    #[arg(long, global = true, default_value_t = crate::search::DEFAULT_NODE_BUDGET)]
    pub budget_nodes: u64,
    /// Largest group order the exhaustive routines enumerate.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget_order: u64,
    /// Write the JSON report to this path (`-` for standard output, which
    /// replaces the text summary).
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify E/C/D and list the Hall classes.
    Analyze {
        /// Group file (JSON) or zoo name.
        group: String,
    },
    /// Run the chief-series reduction.
    Reduce {
        group: String,
        /// Also run the oracle and compare verdicts.
        #[arg(long)]
        compare_oracle: bool,
    },
    /// Count the Hall classes of a normal subgroup induced from the group.
    K {
        group: String,
        /// whole | trivial | derived | center | socle | minimal:<i> |
        /// first-factor | <zoo name> | <group file>
        #[arg(long)]
        normal: String,
    },
    /// Run the corpus and every property suite.
    Corpus {
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Manifest to run instead of the built-in one.
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Regenerate the built-in member list's manifest with the oracle and
        /// write it here instead of running the suites.
        #[arg(long)]
        bootstrap: Option<PathBuf>,
    },
    /// Inspect the named group constructions.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
    /// Reproduce the GL(5,2) example with the inverse-transpose extension.
    ExampleGl52,
}

#[derive(Debug, Subcommand)]
pub enum ZooAction {
    /// List the names used by the corpus.
    List,
    /// Print a group file for a zoo name.
    Emit {
        name: String,
        /// Write to this path instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::InvalidPi(_) => EXIT_PI,
        Error::Verification(_) => EXIT_FAILED,
        Error::Selector(_) | Error::NotNormal(_) | Error::NotSubgroup(_) => EXIT_SUBGROUP,
        Error::Parse { .. }
        | Error::DegreeMismatch(..)
        | Error::PointOutOfRange { .. }
        | Error::NotAPermutation(_)
        | Error::Precondition(_) => EXIT_PARSE,
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Output of one command: the report, its text rendering and the exit code.
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<i32> {
    let out = execute(cli)?;
    emit(cli, &out)?;
    Ok(out.code)
}

fn emit(cli: &Cli, out: &Outcome) -> Result<()> {
    let json = out.report.to_json();
    match cli.json.as_deref() {
        Some(p) if p == Path::new("-") => print!("{json}"),
        Some(p) => {
            std::fs::write(p, json).map_err(|e| Error::Precondition(format!("{}: {e}", p.display())))?;
            print!("{}", out.text);
        }
        None => print!("{}", out.text),
    }
    let _ = std::io::stdout().flush();
    Ok(())
}

pub fn context(cli: &Cli) -> Ctx {
    let budget = Budget {
        nodes: cli.budget_nodes,
        order: cli.budget_order as u128,
        ..Budget::default()
    };
    Ctx::new(budget, cli.seed)
}

fn require_pi(cli: &Cli) -> Result<PiSet> {
    let s = cli
        .pi
        .as_deref()
        .ok_or_else(|| Error::InvalidPi("--pi is required for this command".into()))?;
    PiSet::parse(s)
}

/// A group argument is a file when it names an existing path or looks like
/// one, and a zoo name otherwise.
pub fn load_group(arg: &str) -> Result<(InputKind, String, PermGroup)> {
    let path = Path::new(arg);
    if path.exists() || arg.contains('/') || arg.ends_with(".json") {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            generator: None,
            msg: format!("{arg}: {e}"),
        })?;
        let (file, g) = parse_group_file(&text)?;
        return Ok((InputKind::File, file.name, g));
    }
    Ok((InputKind::Zoo, arg.to_string(), corpus::build_named(arg)?))
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::BudgetExceeded => "budget_exceeded",
    }
}

fn opt<T: std::fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let ctx = context(cli);
    let started = Instant::now();
    let mut out = match &cli.command {
        Command::Analyze { group } => cmd_analyze(cli, &ctx, group)?,
        Command::Reduce { group, compare_oracle } => cmd_reduce(cli, &ctx, group, *compare_oracle)?,
        Command::K { group, normal } => cmd_k(cli, &ctx, group, normal)?,
        Command::Corpus {
            jobs,
            manifest,
            bootstrap,
        } => cmd_corpus(&ctx, *jobs, manifest.as_deref(), bootstrap.as_deref())?,
        Command::Zoo { action } => cmd_zoo(&ctx, action)?,
        Command::ExampleGl52 => cmd_example(&ctx)?,
    };
    out.report
        .timings
        .insert("total".into(), (started.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    Ok(out)
}

fn start(command: &str, cli: &Cli, ctx: &Ctx, group: &str) -> Result<(Report, PiSet, PermGroup)> {
    let pi = require_pi(cli)?;
    let (kind, name, g) = load_group(group)?;
    let mut r = Report::new(command, ctx);
    r.input = Some(InputDescriptor::new(kind, &name, &g));
    r.pi = Some(pi.clone());
    Ok((r, pi, g))
}

fn header(r: &Report) -> String {
    let mut s = String::new();
    if let Some(i) = &r.input {
        let _ = writeln!(s, "group {}: degree {}, order {}", i.name, i.degree, i.order);
    }
    if let Some(pi) = &r.pi {
        let _ = writeln!(s, "pi = {{{pi}}}");
    }
    s
}

fn render_classification(c: &ClassificationRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Hall order {}", c.hall_order);
    let _ = writeln!(s, "E: {}", verdict(c.e));
    let _ = writeln!(s, "C: {}", verdict(c.c));
    let _ = writeln!(s, "D: {}", verdict(c.d));
    let _ = writeln!(s, "k: {}", opt(&c.k));
    let _ = writeln!(s, "pi-separable: {}", verdict(c.pi_separable));
    if let Some(w) = c.d_witness_order {
        let _ = writeln!(s, "pi-subgroup of order {w} lies in no Hall subgroup");
    }
    match &c.hall_classes {
        Some(classes) => {
            for (i, h) in classes.iter().enumerate() {
                let _ = writeln!(s, "  class {i}: size {}, {}", h.class_size, h.digest);
            }
        }
        None => {
            let _ = writeln!(s, "  Hall classes not listed (over budget)");
        }
    }
    s
}

fn cmd_analyze(cli: &Cli, ctx: &Ctx, group: &str) -> Result<Outcome> {
    let (mut r, pi, g) = start("analyze", cli, ctx, group)?;
    let (rec, complete) = report::analyze(&g, &pi, ctx, &mut r.timings)?;
    let text = header(&r) + &render_classification(&rec);
    r.results.classification = Some(rec);
    Ok(Outcome {
        report: r,
        text,
        code: if complete { EXIT_OK } else { EXIT_BUDGET },
    })
}

fn cmd_reduce(cli: &Cli, ctx: &Ctx, group: &str, compare: bool) -> Result<Outcome> {
    let (mut r, pi, g) = start("reduce", cli, ctx, group)?;
    let mut text = header(&r);
    let mut code = EXIT_OK;
    let trace = if compare {
        let (cmp, trace, t) = compare_with_oracle(&g, &pi, ctx)?;
        r.timings.insert("reduction".into(), (t.reduction_ms * 1e3).round() / 1e3);
        r.timings.insert("oracle".into(), (t.oracle_ms * 1e3).round() / 1e3);
        let _ = writeln!(
            text,
            "oracle: {}  agree: {}",
            verdict(cmp.oracle_verdict),
            cmp.agree.map_or("unknown", |a| if a { "yes" } else { "no" })
        );
        match cmp.agree {
            Some(false) => code = EXIT_FAILED,
            None => code = EXIT_BUDGET,
            Some(true) => {}
        }
        r.results.comparison = Some(cmp);
        trace
    } else {
        let t = Instant::now();
        let trace = cpi_reduce(&g, &pi, ctx)?;
        r.timings
            .insert("reduction".into(), (t.elapsed().as_secs_f64() * 1e6).round() / 1e3);
        trace
    };
    for l in &trace.levels {
        let checks: Vec<&str> = l.automizer_checks.iter().map(|c| verdict(c.cpi_verdict)).collect();
        let _ = writeln!(
            text,
            "  level {}: factor order {} ({:?}, {} simple), H order {}, automizer C: [{}]",
            l.index,
            l.factor_order,
            l.factor_kind,
            l.simple_factor_count,
            l.h_order,
            checks.join(", ")
        );
    }
    let _ = writeln!(text, "reduction verdict C: {}", verdict(trace.verdict));
    if let Some(i) = trace.failed_level {
        let _ = writeln!(text, "failed at level {i}");
    }
    if let Some(w) = &trace.budget_exceeded_at {
        let _ = writeln!(text, "budget exceeded at {w}");
    }
    if trace.verdict == Verdict::BudgetExceeded && code == EXIT_OK {
        code = EXIT_BUDGET;
    }
    r.results.reduction = Some(trace);
    Ok(Outcome { report: r, text, code })
}

fn cmd_k(cli: &Cli, ctx: &Ctx, group: &str, normal: &str) -> Result<Outcome> {
    let selector: Selector = normal.parse()?;
    let (mut r, pi, g) = start("k", cli, ctx, group)?;
    let a = selector.resolve(&g, ctx)?;
    if !a.is_normal_in(&g) {
        return Err(Error::NotNormal(format!("{selector} (order {}) is not normal", a.order_u128())));
    }
    let t = Instant::now();
    let k = report::k_record(&g, &a, &selector.to_string(), &pi, ctx)?;
    r.timings.insert("k".into(), (t.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    let mut text = header(&r);
    let _ = writeln!(text, "normal subgroup {}: order {}", k.normal, k.normal_order);
    let _ = writeln!(text, "k_induced: {}", k.k_induced);
    let _ = writeln!(text, "k_total: {}", k.k_total);
    for (i, h) in k.induced.iter().enumerate() {
        let _ = writeln!(text, "  induced class {i}: {}", h.digest);
    }
    r.results.k = Some(k);
    Ok(Outcome {
        report: r,
        text,
        code: EXIT_OK,
    })
}

pub fn render_corpus(c: &CorpusRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3}  {:<16} {:<6} {:>8}  {:<6} {:<6} {:<6} {:>2}  {:<6} {:<6} agree",
        "#", "group", "pi", "order", "E", "C", "D", "k", "reduce", "oracle"
    );
    for row in &c.rows {
        let _ = writeln!(
            s,
            "{:>3}  {:<16} {:<6} {:>8}  {:<6} {:<6} {:<6} {:>2}  {:<6} {:<6} {}",
            row.index,
            row.name,
            row.pi.to_string(),
            row.order,
            verdict(row.e),
            verdict(row.c),
            verdict(row.d),
            opt(&row.k),
            verdict(row.reduction),
            verdict(row.oracle),
            row.agree.map_or("unknown", |a| if a { "yes" } else { "no" })
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<14} {:>7} {:>8}  result  description", "suite", "checks", "skipped");
    for suite in &c.suites {
        let _ = writeln!(
            s,
            "{:<14} {:>7} {:>8}  {:<6}  {}",
            suite.key,
            suite.checks,
            suite.skipped,
            if suite.passed() { "pass" } else { "FAIL" },
            suite.description
        );
        for v in suite.violations.iter().take(5) {
            let _ = writeln!(s, "    {v}");
        }
    }
    let _ = writeln!(s, "\noverall: {}", if c.passed { "pass" } else { "FAIL" });
    s
}

fn cmd_corpus(ctx: &Ctx, jobs: usize, manifest: Option<&Path>, bootstrap: Option<&Path>) -> Result<Outcome> {
    let mut r = Report::new("corpus", ctx);
    if let Some(path) = bootstrap {
        let t = Instant::now();
        let records = corpus::bootstrap_manifest(ctx)?;
        r.timings
            .insert("bootstrap".into(), (t.elapsed().as_secs_f64() * 1e6).round() / 1e3);
        std::fs::write(path, corpus::manifest_to_json(&records))
            .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
        let text = format!("wrote {} manifest records to {}\n", records.len(), path.display());
        return Ok(Outcome {
            report: r,
            text,
            code: EXIT_OK,
        });
    }
    let records = match manifest {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse {
                line: 0,
                generator: None,
                msg: format!("{}: {e}", p.display()),
            })?;
            corpus::parse_manifest(&text)?
        }
        None => corpus::frozen_manifest()?,
    };
    let entries = corpus::load_corpus(&records)?;
    let rec = report::run_corpus(&entries, ctx, jobs, &mut r.timings)?;
    let text = render_corpus(&rec);
    let code = if rec.passed { EXIT_OK } else { EXIT_FAILED };
    r.results.corpus = Some(rec);
    Ok(Outcome { report: r, text, code })
}

/// Distinct names used by the corpus and the product suite.
pub fn zoo_names() -> Vec<&'static str> {
    let mut names: Vec<&str> = CORPUS.iter().chain(EXTRA_PRODUCTS).map(|&(n, _)| n).collect();
    names.push("gl5_2");
    names.push("gl52hat");
    names.sort_unstable();
    names.dedup();
    names
}

fn cmd_zoo(ctx: &Ctx, action: &ZooAction) -> Result<Outcome> {
    let mut r = Report::new("zoo", ctx);
    match action {
        ZooAction::List => {
            let mut text = String::new();
            let mut listing = Vec::new();
            for name in zoo_names() {
                let g = corpus::build_named(name)?;
                let _ = writeln!(text, "{name:<16} degree {:>4}  order {}", g.degree(), g.order_u128());
                listing.push(ZooListing {
                    name: name.to_string(),
                    degree: g.degree(),
                    order: g.order_u128(),
                });
            }
            text.push_str(
                "\nnames: symN altN cyclicN dihedralN psl2_P glN_Q (or glNQ) affP_I gl52hat,\n\
                 joined by x for direct products, with wrK suffix for wreath products\n",
            );
            r.results.zoo = Some(listing);
            Ok(Outcome { report: r, text, code: EXIT_OK })
        }
        ZooAction::Emit { name, out } => {
            let g = corpus::build_named(name)?;
            let json = GroupFile::from_group(name, &g).to_json();
            r.input = Some(InputDescriptor::new(InputKind::Zoo, name, &g));
            let text = match out {
                Some(p) => {
                    std::fs::write(p, &json).map_err(|e| Error::Precondition(format!("{}: {e}", p.display())))?;
                    format!("wrote {name} to {}\n", p.display())
                }
                None => json,
            };
            Ok(Outcome { report: r, text, code: EXIT_OK })
        }
    }
}

fn cmd_example(ctx: &Ctx) -> Result<Outcome> {
    let mut r = Report::new("example-gl52", ctx);
    let t = Instant::now();
    let (ex, _) = run_gl52_example(ctx)?;
    r.timings
        .insert("example".into(), (t.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    r.pi = Some(ex.pi.clone());
    let mut text = String::new();
    let _ = writeln!(text, "|GL(5,2)| = {} = {:?}", ex.gl_order, ex.gl_order_factorization);
    let _ = writeln!(text, "|extension| = {}", ex.hat_order);
    for h in &ex.halls {
        let _ = writeln!(
            text,
            "  {} dims {:?}: order {}, {} -> class {}",
            h.name,
            h.dims,
            h.order,
            h.fingerprint_digest,
            opt(&h.iota_image)
        );
    }
    let _ = writeln!(text, "Hall subgroup of the extension: order {}", ex.extension_hall_order);
    let _ = writeln!(text, "k_induced over the known classes: {}", ex.k_induced_known_classes);
    for c in &ex.claims {
        let status = match c.status {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Failed => "FAILED",
            ClaimStatus::Unverified => "unverified",
        };
        let _ = writeln!(text, "  [{status}] {}: {}", c.id, c.statement);
    }
    let code = if ex.all_verified() {
        EXIT_OK
    } else {
        for c in ex.failed() {
            eprintln!("claim failed: {} ({})", c.id, c.detail);
        }
        EXIT_FAILED
    };
    r.results.example = Some(ex);
    Ok(Outcome { report: r, text, code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("hallcpi").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn exit_codes_follow_the_error_kind() {
        assert_eq!(exit_code(&Error::budget("x")), EXIT_BUDGET);
        assert_eq!(exit_code(&Error::InvalidPi("x".into())), EXIT_PI);
        assert_eq!(exit_code(&Error::NotNormal("x".into())), EXIT_SUBGROUP);
        assert_eq!(
            exit_code(&Error::Parse {
                line: 1,
                generator: None,
                msg: "x".into()
            }),
            EXIT_PARSE
        );
    }

    #[test]
    fn analyze_reports_the_expected_verdicts() {
        for (g, pi, c, k) in [("alt5", "2,3", Verdict::True, 1), ("gl32", "2,3", Verdict::False, 2)] {
            let out = execute(&parse(&["analyze", g, "--pi", pi])).unwrap();
            assert_eq!(out.code, EXIT_OK);
            let rec = out.report.results.classification.unwrap();
            assert_eq!(rec.c, c, "{g}");
            assert_eq!(rec.k, Some(k), "{g}");
        }
        let out = execute(&parse(&["analyze", "sym4", "--pi", "7"])).unwrap();
        let rec = out.report.results.classification.unwrap();
        assert_eq!(rec.c, Verdict::True);
        assert_eq!(rec.hall_order, 1);
    }

    #[test]
    fn bad_inputs_map_to_exit_codes() {
        let run = |args: &[&str]| main_with_args(std::iter::once("hallcpi").chain(args.iter().copied()));
        assert_eq!(run(&["analyze", "alt5", "--pi", "2,4"]), EXIT_PI);
        assert_eq!(run(&["analyze", "alt5"]), EXIT_PI);
        assert_eq!(run(&["analyze", "nosuchgroup", "--pi", "2"]), EXIT_PARSE);
        assert_eq!(run(&["analyze", "sym6", "--pi", "2,3", "--budget-order", "100"]), EXIT_BUDGET);
        assert_eq!(run(&["k", "sym4", "--normal", "cyclic4x", "--pi", "2,3"]), EXIT_SUBGROUP);
        assert_eq!(run(&["k", "sym5", "--normal", "minimal:9", "--pi", "2,3"]), EXIT_SUBGROUP);
        assert_eq!(run(&["--bogus"]), EXIT_PARSE);
    }

    #[test]
    fn k_rejects_non_normal_subgroups() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let g = crate::zoo::sym(4);
        let h = g.subgroup(vec![crate::perm::Perm::from_images(vec![1, 0, 2, 3]).unwrap()]);
        std::fs::write(&path, GroupFile::from_group("t", &h).to_json()).unwrap();
        let cli = parse(&["k", "sym4", "--normal", path.to_str().unwrap(), "--pi", "2,3"]);
        assert!(matches!(execute(&cli), Err(Error::NotNormal(_))));
    }

    #[test]
    fn k_examples() {
        let k = |args: &[&str]| execute(&parse(args)).unwrap().report.results.k.unwrap();
        let r = k(&["k", "sym5", "--normal", "alt5", "--pi", "2,3"]);
        assert_eq!((r.k_induced, r.k_total), (1, 1));
        let r = k(&["k", "alt5xalt5", "--normal", "first-factor", "--pi", "2,3"]);
        assert_eq!(r.k_induced, 1);
        let r = k(&["k", "gl32", "--normal", "whole", "--pi", "2,3"]);
        assert_eq!(r.k_induced, r.k_total);
    }

    #[test]
    fn reduce_examples() {
        let red = |args: &[&str]| execute(&parse(args)).unwrap();
        let out = red(&["reduce", "sym5", "--pi", "2,3", "--compare-oracle"]);
        let cmp = out.report.results.comparison.clone().unwrap();
        assert_eq!((cmp.agree, cmp.reduction_verdict), (Some(true), Verdict::True));
        let out = red(&["reduce", "gl32", "--pi", "2,3", "--compare-oracle"]);
        let cmp = out.report.results.comparison.clone().unwrap();
        assert_eq!((cmp.agree, cmp.reduction_verdict), (Some(true), Verdict::False));
        assert_eq!(out.code, EXIT_OK);
        let out = red(&["reduce", "sym4", "--pi", "2"]);
        assert_eq!(out.report.results.reduction.unwrap().verdict, Verdict::True);
    }

    #[test]
    fn single_entry_manifest_gives_one_row() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        let one: Vec<_> = corpus::frozen_manifest().unwrap().into_iter().take(1).collect();
        std::fs::write(&path, corpus::manifest_to_json(&one)).unwrap();
        let out = execute(&parse(&["corpus", "--jobs", "2", "--manifest", path.to_str().unwrap()])).unwrap();
        let rec = out.report.results.corpus.unwrap();
        assert_eq!(rec.rows.len(), 1);
        assert!(rec.passed, "{}", out.text);
        assert_eq!(out.code, EXIT_OK);
    }

    #[test]
    fn zoo_emit_round_trips() {
        let out = execute(&parse(&["zoo", "emit", "dihedral5"])).unwrap();
        let (_, g) = parse_group_file(&out.text).unwrap();
        assert_eq!(g.order_u128(), 10);
    }
}
