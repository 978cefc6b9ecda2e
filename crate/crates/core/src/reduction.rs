//! Deciding `C_π` by descending a chief series.
//!
//! With `G = G_0 > G_1 > ... > G_n = 1` a chief series, `H_1 = G` and
//! `H_i / G_{i-1}` a π-Hall subgroup of `G / G_{i-1}`, the group `H_i / G_i`
//! satisfies `C_π` exactly when the automizer `Aut_{H_i}(S)` of every simple
//! factor `S` of `G_{i-1} / G_i` does. In that case `H_{i+1}` is taken to be
//! the preimage of a π-Hall subgroup of `H_i / G_i`; otherwise `G` is not
//! `C_π`. When every level passes, `H_{n+1}` is a π-Hall subgroup of `G`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::Ctx;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hall::{
    all_hall_classes, class_is_invariant, classify, extend_hall, find_hall, is_hall, pi_part, PiSet,
    Verdict, VerdictSource,
};
use crate::hom::{quotient, Hom};
use crate::search;
use crate::structure::{chief_series, induced_automizer, AutomizerStrategy, ChiefSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    Abelian,
    Semisimple,
}

/// The `C_π` check of one automizer `Aut_{H_i}(S_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomizerCheck {
    /// Index of the representative simple factor (0-based).
    pub factor_index: usize,
    /// Number of simple factors in its `H_i`-orbit.
    pub orbit_size: usize,
    pub automizer_order: u128,
    pub strategy: Option<AutomizerStrategy>,
    pub cpi_verdict: Verdict,
    pub source: Option<VerdictSource>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelTrace {
    /// 1-based level `i`: the factor `G_{i-1} / G_i`.
    pub index: usize,
    pub factor_order: u128,
    pub factor_kind: FactorKind,
    pub simple_factor_count: usize,
    pub automizer_checks: Vec<AutomizerCheck>,
    /// Order of `H_i`.
    pub h_order: u128,
    /// Generators of `H_i` as image lists.
    pub h_generators: Vec<Vec<u32>>,
    /// How `H_{i+1}` was obtained, when it was.
    pub next_hall_method: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub pi: PiSet,
    pub group_order: u128,
    pub chief_factor_orders: Vec<u128>,
    pub levels: Vec<LevelTrace>,
    pub verdict: Verdict,
    /// The level whose automizer check failed, when the verdict is false.
    pub failed_level: Option<usize>,
    pub hall_witness_order: Option<u128>,
    pub hall_witness_generators: Option<Vec<Vec<u32>>>,
    /// Verdict of the composition-factor criterion, when it applies.
    pub shortcut_verdict: Option<Verdict>,
    /// Whether a registered special-case verdict was consulted.
    pub registry_used: bool,
    pub budget_exceeded_at: Option<String>,
}

impl ReductionTrace {
    /// The π-Hall witness as a group of the given degree.
    pub fn hall_witness(&self, degree: usize) -> Result<Option<PermGroup>> {
        self.hall_witness_generators
            .as_ref()
            .map(|gens| crate::io::group_from_images(degree, gens))
            .transpose()
    }
}

fn images_of(g: &PermGroup) -> Vec<Vec<u32>> {
    g.generators().iter().map(|x| x.images().to_vec()).collect()
}

/// `C_π` verdicts for the automizers of one representative per
/// `hi`-orbit on the simple factors (`factors`, given modulo `b`) of `a / b`.
pub fn automizer_cpi_check(
    hi: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    factors: &[PermGroup],
    abelian: bool,
    pi: &PiSet,
    ctx: &Ctx,
) -> Result<Vec<AutomizerCheck>> {
    if abelian {
        // solvable sections satisfy C_π by Hall's theorem
        return Ok(vec![AutomizerCheck {
            factor_index: 0,
            orbit_size: factors.len(),
            automizer_order: 0,
            strategy: None,
            cpi_verdict: Verdict::True,
            source: Some(VerdictSource::Trivial),
        }]);
    }
    let _ = a;
    let orbits = factor_orbits(hi, factors);
    let mut out = Vec::new();
    for orbit in orbits {
        let j = orbit[0];
        let s = &factors[j];
        let n = search::normalizer(hi, s, ctx.budget.nodes)?;
        let aut = induced_automizer(&n, s, b, ctx)?;
        let c = classify(&aut.section_image, pi, ctx)?;
        out.push(AutomizerCheck {
            factor_index: j,
            orbit_size: orbit.len(),
            automizer_order: aut.section_image.order_u128(),
            strategy: Some(aut.strategy),
            cpi_verdict: Verdict::from_option(c.c),
            source: Some(c.source),
        });
    }
    Ok(out)
}

/// Orbits of `h` (by conjugation) on a list of subgroups it permutes.
fn factor_orbits(h: &PermGroup, factors: &[PermGroup]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; factors.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..factors.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let cur = members[head];
            head += 1;
            for x in h.generators() {
                let img = factors[cur].conjugate(x);
                if let Some(k) = factors.iter().position(|f| f.same_group(&img)) {
                    if orbit_of[k] == usize::MAX {
                        orbit_of[k] = id;
                        members.push(k);
                    }
                }
            }
        }
        members.sort();
        orbits.push(members);
    }
    orbits
}

/// A π-Hall subgroup of `hi / b`, pulled back to `hi`. `a / b` is the
/// normal section whose automizers were checked; `hi / a` is a π-group.
fn next_hall(
    hi: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    abelian: bool,
    pi: &PiSet,
    ctx: &Ctx,
) -> Result<(PermGroup, String)> {
    let (q, abar, hom): (PermGroup, PermGroup, Option<Hom>) = if b.is_trivial() {
        (hi.clone(), a.clone(), None)
    } else {
        match quotient(hi, b, ctx.budget.index) {
            Ok((image, hom)) => {
                let abar = hom.image_group(a)?;
                (image, abar, Some(hom))
            }
            Err(e) if e.is_budget() => {
                // the section has no affordable representation: search the
                // preimage directly
                let h = find_hall(hi, pi, ctx)?
                    .ok_or_else(|| Error::Verification("H_i has no π-Hall subgroup".into()))?;
                let h = h.join(b).reduced();
                return Ok((h, "find_hall in the preimage".into()));
            }
            Err(e) => return Err(e),
        }
    };
    let pull = |x: PermGroup| -> Result<PermGroup> {
        match &hom {
            None => Ok(x),
            Some(h) => Ok(h.preimage(&x)?.reduced()),
        }
    };
    if ctx.special_case(&q, pi).is_some() {
        let h = find_hall(&q, pi, ctx)?.ok_or_else(|| Error::Verification("registered group without Hall subgroup".into()))?;
        return Ok((pull(h)?, "registered Hall subgroup".into()));
    }
    let candidates: Vec<PermGroup> = if abelian {
        let m = pi_part(abar.order_u128(), pi);
        vec![if m == 1 { PermGroup::trivial(abar.degree()) } else { abar.clone() }]
    } else {
        all_hall_classes(&abar, pi, ctx)?.class_reps
    };
    for m in candidates {
        if !class_is_invariant(&q, &abar, &m, ctx)? {
            continue;
        }
        if let Some(h) = extend_hall(&q, &abar, &m, pi, ctx)? {
            return Ok((pull(h)?, "extend_hall on the section".into()));
        }
    }
    Err(Error::Verification(
        "automizer checks passed but no invariant Hall class of the section extends".into(),
    ))
}

/// The composition-factor criterion, available when `2 ∉ π` or `3 ∉ π`:
/// `G` is `C_π` iff every nonabelian composition factor is.
pub fn composition_factor_shortcut(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<Option<bool>> {
    let series = chief_series(g, ctx)?;
    composition_criterion(&series, pi, ctx)
}

fn composition_criterion(series: &ChiefSeries, pi: &PiSet, ctx: &Ctx) -> Result<Option<bool>> {
    if pi.contains(2) && pi.contains(3) {
        return Ok(None);
    }
    for (i, f) in series.factors.iter().enumerate() {
        if f.abelian {
            continue;
        }
        let lower = &series.terms[i + 1];
        // the simple factors of one chief factor are isomorphic
        let s = &f.simple_factors[0];
        let simple = if lower.is_trivial() {
            s.clone()
        } else {
            quotient(s, lower, ctx.budget.index)?.0
        };
        if classify(&simple, pi, ctx)?.c != Some(true) {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Runs the chief-series reduction. Budget exhaustion is reported in the
/// trace (with the levels completed so far), never as a negative verdict.
pub fn cpi_reduce(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<ReductionTrace> {
    let mut trace = ReductionTrace {
        pi: pi.clone(),
        group_order: g.order_u128(),
        chief_factor_orders: Vec::new(),
        levels: Vec::new(),
        verdict: Verdict::BudgetExceeded,
        failed_level: None,
        hall_witness_order: None,
        hall_witness_generators: None,
        shortcut_verdict: None,
        registry_used: false,
        budget_exceeded_at: None,
    };
    match reduce_into(g, pi, ctx, &mut trace) {
        Ok(()) => Ok(trace),
        Err(e) if e.is_budget() => {
            trace.verdict = Verdict::BudgetExceeded;
            let at = match trace.levels.last() {
                Some(l) => format!("level {}: {e}", l.index),
                None => format!("chief series: {e}"),
            };
            trace.budget_exceeded_at = Some(at);
            Ok(trace)
        }
        Err(e) => Err(e),
    }
}

fn reduce_into(g: &PermGroup, pi: &PiSet, ctx: &Ctx, trace: &mut ReductionTrace) -> Result<()> {
    let total = g.order_u128();
    let series = chief_series(g, ctx)?;
    trace.chief_factor_orders = series.factors.iter().map(|f| f.order).collect();
    trace.shortcut_verdict = match composition_criterion(&series, pi, ctx) {
        Ok(v) => v.map(Verdict::from_bool),
        Err(e) if e.is_budget() => Some(Verdict::BudgetExceeded),
        Err(e) => return Err(e),
    };
    let mut hi = g.clone();
    for (k, f) in series.factors.iter().enumerate() {
        let (a, b) = (&series.terms[k], &series.terms[k + 1]);
        let expected = pi_part(total / a.order_u128(), pi);
        if !hi.is_subgroup(a) || hi.order_u128() / a.order_u128() != expected {
            return Err(Error::Verification(format!(
                "H_{} is not the preimage of a π-Hall subgroup of G/G_{}",
                k + 1,
                k
            )));
        }
        let mut level = LevelTrace {
            index: k + 1,
            factor_order: f.order,
            factor_kind: if f.abelian { FactorKind::Abelian } else { FactorKind::Semisimple },
            simple_factor_count: f.simple_factors.len(),
            automizer_checks: Vec::new(),
            h_order: hi.order_u128(),
            h_generators: images_of(&hi),
            next_hall_method: None,
        };
        trace.levels.push(level.clone());
        let checks = automizer_cpi_check(&hi, a, b, &f.simple_factors, f.abelian, pi, ctx)?;
        let uses_registry = checks.iter().any(|c| c.source == Some(VerdictSource::Registered));
        trace.registry_used |= uses_registry;
        level.automizer_checks = checks.clone();
        *trace.levels.last_mut().expect("pushed") = level.clone();
        if checks.iter().any(|c| c.cpi_verdict == Verdict::BudgetExceeded) {
            return Err(Error::budget("automizer classification"));
        }
        if checks.iter().any(|c| c.cpi_verdict == Verdict::False) {
            trace.verdict = Verdict::False;
            trace.failed_level = Some(k + 1);
            return Ok(());
        }
        let (next, method) = next_hall(&hi, a, b, f.abelian, pi, ctx)?;
        trace.registry_used |= method.starts_with("registered");
        level.next_hall_method = Some(method);
        *trace.levels.last_mut().expect("pushed") = level;
        hi = next;
    }
    if !is_hall(g, &hi, pi)? {
        return Err(Error::Verification("H_{n+1} is not a π-Hall subgroup".into()));
    }
    trace.verdict = Verdict::True;
    trace.hall_witness_order = Some(hi.order_u128());
    trace.hall_witness_generators = Some(images_of(&hi));
    Ok(())
}

/// Outcome of running the reduction and the oracle on the same input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub reduction_verdict: Verdict,
    pub oracle_verdict: Verdict,
    /// `None` when either side ran out of budget.
    pub agree: Option<bool>,
    pub shortcut_verdict: Option<Verdict>,
    /// The reduction's witness is a π-Hall subgroup (checked when present).
    pub witness_checked: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub reduction_ms: f64,
    pub oracle_ms: f64,
}

/// Runs the reduction and the oracle concurrently and compares verdicts.
pub fn compare_with_oracle(
    g: &PermGroup,
    pi: &PiSet,
    ctx: &Ctx,
) -> Result<(Comparison, ReductionTrace, Timings)> {
    let (red, orc) = rayon::join(
        || {
            let t = Instant::now();
            (cpi_reduce(g, pi, ctx), t.elapsed())
        },
        || {
            let t = Instant::now();
            (oracle_cpi(g, pi, ctx), t.elapsed())
        },
    );
    let trace = red.0?;
    let oracle_verdict = orc.0?;
    let mut witness_checked = false;
    if let Some(h) = trace.hall_witness(g.degree())? {
        if !is_hall(g, &h, pi)? {
            return Err(Error::Verification("reduction witness is not π-Hall".into()));
        }
        witness_checked = true;
    }
    let agree = match (trace.verdict.known(), oracle_verdict.known()) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok((
        Comparison {
            reduction_verdict: trace.verdict,
            oracle_verdict,
            agree,
            shortcut_verdict: trace.shortcut_verdict,
            witness_checked,
        },
        trace,
        Timings {
            reduction_ms: red.1.as_secs_f64() * 1e3,
            oracle_ms: orc.1.as_secs_f64() * 1e3,
        },
    ))
}

/// The oracle's `C_π` verdict (exhaustive enumeration only; registered
/// cases are not consulted).
pub fn oracle_cpi(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<Verdict> {
    let plain = Ctx::new(ctx.budget.clone(), ctx.seed);
    match classify(g, pi, &plain) {
        Ok(c) => Ok(Verdict::from_option(c.c)),
        Err(e) if e.is_budget() => Ok(Verdict::BudgetExceeded),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn pi(s: &str) -> PiSet {
        PiSet::parse(s).unwrap()
    }

    #[test]
    fn pi_group_is_its_own_witness() {
        let t = cpi_reduce(&zoo::sym(4), &pi("2,3"), &Ctx::default()).unwrap();
        assert_eq!(t.verdict, Verdict::True);
        assert_eq!(t.hall_witness_order, Some(24));
    }

    #[test]
    fn sym5_and_gl32() {
        let ctx = Ctx::default();
        let t = cpi_reduce(&zoo::sym(5), &pi("2,3"), &ctx).unwrap();
        assert_eq!(t.verdict, Verdict::True);
        assert_eq!(t.hall_witness_order, Some(24));
        let t = cpi_reduce(&zoo::gl(3, 2).unwrap(), &pi("2,3"), &ctx).unwrap();
        assert_eq!(t.verdict, Verdict::False);
        assert_eq!(t.failed_level, Some(1));
        assert_eq!(t.levels[0].automizer_checks[0].cpi_verdict, Verdict::False);
    }

    #[test]
    fn automizer_checks() {
        let ctx = Ctx::default();
        let s5 = zoo::sym(5);
        let a5 = zoo::alt(5);
        let one = PermGroup::trivial(5);
        let c = automizer_cpi_check(&s5, &a5, &one, std::slice::from_ref(&a5), false, &pi("2,3"), &ctx).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].automizer_order, 120);
        assert_eq!(c[0].cpi_verdict, Verdict::True);
        let c = automizer_cpi_check(&s5, &s5, &a5, std::slice::from_ref(&s5), true, &pi("2,3"), &ctx).unwrap();
        assert_eq!(c[0].cpi_verdict, Verdict::True);
    }

    #[test]
    fn wreath_product_orbits_collapse() {
        let ctx = Ctx::default();
        let g = zoo::wreath(&zoo::alt(5), 2);
        let t = cpi_reduce(&g, &pi("2,3"), &ctx).unwrap();
        assert_eq!(t.verdict, Verdict::True);
        let semisimple = t.levels.iter().find(|l| l.factor_kind == FactorKind::Semisimple).unwrap();
        assert_eq!(semisimple.simple_factor_count, 2);
        assert_eq!(semisimple.automizer_checks.len(), 1);
        assert_eq!(semisimple.automizer_checks[0].orbit_size, 2);
        assert_eq!(t.hall_witness_order, Some(288));
    }

    #[test]
    fn shortcut_and_oracle_agree() {
        let ctx = Ctx::default();
        for (g, p) in [
            (zoo::alt(5), "2,5"),
            (zoo::direct_product(&zoo::sym(5), &zoo::cyclic(7)), "3,5"),
            (zoo::psl2(7).unwrap(), "3,7"),
        ] {
            let (cmp, trace, _) = compare_with_oracle(&g, &pi(p), &ctx).unwrap();
            assert_eq!(cmp.agree, Some(true), "{p}");
            assert_eq!(trace.shortcut_verdict, Some(cmp.oracle_verdict));
        }
        assert_eq!(composition_factor_shortcut(&zoo::alt(5), &pi("2,3"), &ctx).unwrap(), None);
    }

    #[test]
    fn trace_round_trips() {
        let t = cpi_reduce(&zoo::sym(5), &pi("2,3"), &Ctx::default()).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: ReductionTrace = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn budget_is_reported_not_negative() {
        let mut ctx = Ctx::default();
        ctx.budget.order = 10;
        let t = cpi_reduce(&zoo::alt(5), &pi("2,3"), &ctx).unwrap();
        assert_eq!(t.verdict, Verdict::BudgetExceeded);
        assert!(t.budget_exceeded_at.is_some());
    }
}
