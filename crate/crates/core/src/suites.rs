//! Property suites run over the corpus. Each suite checks one structural
//! statement about Hall subgroups on every applicable corpus instance,
//! using the exhaustive oracle as the source of truth.
//!
//! A check either holds, is violated (recorded with a description), or is
//! skipped because a budget was exceeded; budget skips are counted
//! separately and never turned into verdicts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Ctx;
use crate::corpus::{build_named, CorpusEntry};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hall::{
    all_hall_classes, are_conjugate, class_is_invariant, classify, dominance_witness, enumerate_halls, is_hall, is_pi_number,
    k_induced, pi_separable, Classification, PiSet,
};
use crate::hom::quotient;
use crate::reduction::{compare_with_oracle, composition_factor_shortcut, Comparison};
use crate::search;
use crate::structure::{self, normal_subgroups};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    /// Table key shown by the corpus command.
    pub key: String,
    pub description: String,
    pub checks: usize,
    pub skipped: usize,
    pub violations: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of a single check: `Ok(None)` holds, `Ok(Some(msg))` is a
/// violation, a budget error is a skip and any other error a violation.
type Check = Result<Option<String>>;

fn tally(key: &str, description: &str, checks: Vec<Check>) -> SuiteResult {
    let mut out = SuiteResult {
        key: key.to_string(),
        description: description.to_string(),
        checks: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for c in checks {
        match c {
            Ok(None) => out.checks += 1,
            Ok(Some(v)) => {
                out.checks += 1;
                out.violations.push(v);
            }
            Err(e) if e.is_budget() => out.skipped += 1,
            Err(e) => {
                out.checks += 1;
                out.violations.push(format!("error: {e}"));
            }
        }
    }
    out
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Check {
    Ok(if ok { None } else { Some(msg()) })
}

/// Per-entry data shared by the suites.
#[derive(Clone, Debug)]
pub struct EntryFacts {
    pub name: String,
    pub pi: PiSet,
    pub group: PermGroup,
    pub classification: Classification,
    /// One representative per class of π-Hall subgroups.
    pub hall_reps: Vec<PermGroup>,
    pub normals: Vec<PermGroup>,
}

impl EntryFacts {
    fn label(&self) -> String {
        format!("{} π={{{}}}", self.name, self.pi)
    }

    fn is_cpi(&self) -> bool {
        self.classification.c == Some(true)
    }

    /// Proper nontrivial normal subgroups.
    fn proper_normals(&self) -> impl Iterator<Item = &PermGroup> {
        let n = self.group.order_u128();
        self.normals
            .iter()
            .filter(move |a| !a.is_trivial() && a.order_u128() < n)
    }
}

pub fn prepare(entries: &[CorpusEntry], ctx: &Ctx) -> Result<Vec<EntryFacts>> {
    entries
        .par_iter()
        .map(|e| {
            let g = &e.entry.group;
            Ok(EntryFacts {
                name: e.entry.name.clone(),
                pi: e.pi.clone(),
                group: g.clone(),
                classification: classify(g, &e.pi, ctx)?,
                hall_reps: all_hall_classes(g, &e.pi, ctx)?.class_reps,
                normals: normal_subgroups(g, ctx)?,
            })
        })
        .collect()
}

/// `C_π` of `g`, with unknown verdicts reported as budget errors.
fn cpi(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<bool> {
    classify(g, pi, ctx)?
        .c
        .ok_or_else(|| Error::budget("classification left C_π unknown"))
}

fn par_checks<F>(facts: &[EntryFacts], f: F) -> Vec<Check>
where
    F: Fn(&EntryFacts) -> Vec<Check> + Sync + Send,
{
    facts.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// `⟨H, A⟩` is `C_π` for every normal `A` of a `C_π` group.
pub fn hall_times_normal(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        if !f.is_cpi() {
            return Vec::new();
        }
        let h = &f.hall_reps[0];
        f.normals
            .iter()
            .map(|a| {
                let ha = h.join(a);
                let ok = cpi(&ha, &f.pi, ctx)?;
                expect(ok, || {
                    format!("{}: ⟨H,A⟩ of order {} with |A|={} is not C_π", f.label(), ha.order_u128(), a.order_u128())
                })
            })
            .collect()
    });
    tally(
        "Theorem 1",
        "HA satisfies C_π for every normal A of a C_π group",
        checks,
    )
}

/// `H ∩ A` is Hall in `A` and `HA/A` is Hall in `G/A`.
pub fn hall_intersections_and_images(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        let mut out = Vec::new();
        for h in &f.hall_reps {
            for a in &f.normals {
                out.push((|| {
                    let ha = search::intersection(h, a, ctx.budget.nodes)?;
                    if !is_hall(a, &ha, &f.pi)? {
                        return Ok(Some(format!("{}: H∩A not Hall in A (|A|={})", f.label(), a.order_u128())));
                    }
                    let (q, hom) = quotient(&f.group, a, ctx.budget.index)?;
                    let img = hom.image_group(h)?;
                    expect(is_hall(&q, &img, &f.pi)?, || {
                        format!("{}: image of H not Hall in G/A (|A|={})", f.label(), a.order_u128())
                    })
                })());
            }
        }
        out
    });
    tally(
        "Lemma 4(1)",
        "H∩A is Hall in A and HA/A is Hall in G/A",
        checks,
    )
}

/// π-separable groups satisfy E, C and D; checked on every entry and every
/// normal subgroup of it.
pub fn separable_implies_dominance(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        f.normals
            .iter()
            .map(|a| {
                if !pi_separable(a, &f.pi, ctx)? {
                    return Ok(None);
                }
                // the dominance search runs directly: classify itself
                // short-cuts separable groups
                let e = enumerate_halls(a, &f.pi, ctx, false)?;
                let k = e.class_count();
                let witness = if k == 1 { dominance_witness(&e, ctx)?.map(|w| w.count()) } else { None };
                expect(k == 1 && witness.is_none(), || {
                    format!(
                        "{}: π-separable normal subgroup of order {} has {k} Hall classes, bad π-subgroup of order {witness:?}",
                        f.label(),
                        a.order_u128()
                    )
                })
            })
            .collect()
    });
    tally(
        "Lemma 4(2)",
        "π-separable groups satisfy D_π",
        checks,
    )
}

/// `A` and `G/A` both `C_π` implies `G` is `C_π`.
pub fn extension_closure(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        f.proper_normals()
            .map(|a| {
                let (q, _) = quotient(&f.group, a, ctx.budget.index)?;
                let both = cpi(a, &f.pi, ctx)? && cpi(&q, &f.pi, ctx)?;
                expect(!both || f.is_cpi(), || {
                    format!("{}: A (order {}) and G/A are C_π but G is not", f.label(), a.order_u128())
                })
            })
            .collect()
    });
    tally(
        "Lemma 5",
        "C_π is closed under extensions",
        checks,
    )
}

/// In a `C_π` group, `N_G(HA)` and `N_G(H∩A)` are `C_π`.
pub fn normalizers_inherit(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        if !f.is_cpi() {
            return Vec::new();
        }
        let h = &f.hall_reps[0];
        let mut out = Vec::new();
        for a in &f.normals {
            out.push((|| {
                let n = structure::normalizer(&f.group, &h.join(a), ctx)?;
                expect(cpi(&n, &f.pi, ctx)?, || {
                    format!("{}: N_G(HA) not C_π (|A|={})", f.label(), a.order_u128())
                })
            })());
            out.push((|| {
                let i = search::intersection(h, a, ctx.budget.nodes)?;
                let n = structure::normalizer(&f.group, &i, ctx)?;
                expect(cpi(&n, &f.pi, ctx)?, || {
                    format!("{}: N_G(H∩A) not C_π (|A|={})", f.label(), a.order_u128())
                })
            })());
        }
        out
    });
    tally(
        "Lemma 7",
        "normalizers of HA and H∩A inherit C_π",
        checks,
    )
}

/// Quotients of `C_π` groups are `C_π`.
pub fn quotients_inherit(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        if !f.is_cpi() {
            return Vec::new();
        }
        f.proper_normals()
            .map(|a| {
                let (q, _) = quotient(&f.group, a, ctx.budget.index)?;
                expect(cpi(&q, &f.pi, ctx)?, || {
                    format!("{}: G/A not C_π (|A|={})", f.label(), a.order_u128())
                })
            })
            .collect()
    });
    tally(
        "Lemma 9",
        "quotients of C_π groups are C_π",
        checks,
    )
}

/// Whether `H A C_G(A)` is normal in `G`.
fn hac_is_normal(f: &EntryFacts, h: &PermGroup, a: &PermGroup, ctx: &Ctx) -> Result<bool> {
    let c = structure::centralizer(&f.group, a, ctx)?;
    Ok(h.join(a).join(&c).is_normal_in(&f.group))
}

/// With `HAC_G(A)` normal, an `A`-class of Hall subgroups of `A` is
/// `G`-induced exactly when it is `H`-invariant.
pub fn induced_iff_invariant(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        let mut out = Vec::new();
        for h in &f.hall_reps {
            for a in &f.normals {
                let pairs: Result<Vec<Check>> = (|| {
                    if !hac_is_normal(f, h, a, ctx)? {
                        return Ok(Vec::new());
                    }
                    let classes = all_hall_classes(a, &f.pi, ctx)?;
                    let induced = k_induced(&f.group, a, &f.pi, ctx)?.induced_reps;
                    let mut v = Vec::new();
                    for m in &classes.class_reps {
                        let mut is_induced = false;
                        for r in &induced {
                            if are_conjugate(a, m, r, ctx)?.is_conjugate() {
                                is_induced = true;
                                break;
                            }
                        }
                        let invariant = class_is_invariant(h, a, m, ctx)?;
                        v.push(expect(is_induced == invariant, || {
                            format!(
                                "{}: |A|={} class induced={is_induced} but H-invariant={invariant}",
                                f.label(),
                                a.order_u128()
                            )
                        }));
                    }
                    Ok(v)
                })();
                match pairs {
                    Ok(v) => out.extend(v),
                    Err(e) => out.push(Err(e)),
                }
            }
        }
        out
    });
    tally(
        "Lemma 11",
        "an A-class is G-induced iff H-invariant (HAC_G(A) normal)",
        checks,
    )
}

/// With `HA` normal, `k^G(A) = k^{HA}(A)`.
pub fn induced_count_in_ha(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        let mut out = Vec::new();
        for h in &f.hall_reps {
            for a in &f.normals {
                let ha = h.join(a);
                if !ha.is_normal_in(&f.group) {
                    continue;
                }
                out.push((|| {
                    let kg = k_induced(&f.group, a, &f.pi, ctx)?.k_induced;
                    let kha = k_induced(&ha, a, &f.pi, ctx)?.k_induced;
                    expect(kg == kha, || {
                        format!("{}: |A|={} k^G(A)={kg} but k^HA(A)={kha}", f.label(), a.order_u128())
                    })
                })());
            }
        }
        out
    });
    tally(
        "Lemma 12",
        "k^G(A) = k^HA(A) when HA is normal",
        checks,
    )
}

/// With `HA` normal: `k^G(A) = 1` iff `HA` is `C_π` iff all Hall subgroups
/// of `G` are conjugate under `A`.
pub fn single_induced_class(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        let mut out = Vec::new();
        for h in &f.hall_reps {
            for a in &f.normals {
                let ha = h.join(a);
                if !ha.is_normal_in(&f.group) {
                    continue;
                }
                out.push((|| {
                    let one = k_induced(&f.group, a, &f.pi, ctx)?.k_induced == 1;
                    let ha_cpi = cpi(&ha, &f.pi, ctx)?;
                    let e = enumerate_halls(&f.group, &f.pi, ctx, false)?;
                    let amaps = e.table.conjugation_maps(a.generators());
                    let (_, sizes) = e.table.subgroup_classes(&e.all, &amaps);
                    let a_transitive = sizes.len() == 1;
                    expect(one == ha_cpi && ha_cpi == a_transitive, || {
                        format!(
                            "{}: |A|={} k^G(A)=1: {one}, HA C_π: {ha_cpi}, A-conjugate: {a_transitive}",
                            f.label(),
                            a.order_u128()
                        )
                    })
                })());
            }
        }
        out
    });
    tally(
        "Lemma 13",
        "k^G(A)=1 ⟺ HA ∈ C_π ⟺ Hall subgroups conjugate under A",
        checks,
    )
}

/// Direct products used for the multiplicativity check beyond the corpus.
pub const EXTRA_PRODUCTS: &[(&str, &str)] = &[("gl3_2xgl3_2", "2,3"), ("alt5xsym4", "2,3"), ("psl2_7xpsl2_7", "3,7")];

/// `k(A₁ × A₂) = k(A₁)·k(A₂)`.
pub fn product_multiplicativity(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let mut pairs: Vec<(String, PiSet)> = facts
        .iter()
        .filter(|f| f.name.split('x').count() == 2)
        .map(|f| (f.name.clone(), f.pi.clone()))
        .collect();
    for &(n, p) in EXTRA_PRODUCTS {
        if let Ok(pi) = PiSet::parse(p) {
            pairs.push((n.to_string(), pi));
        }
    }
    let checks: Vec<Check> = pairs
        .par_iter()
        .map(|(name, pi)| {
            let atoms: Vec<&str> = name.split('x').collect();
            let k = |n: &str| -> Result<usize> { Ok(all_hall_classes(&build_named(n)?, pi, ctx)?.class_reps.len()) };
            let whole = k(name)?;
            let (k1, k2) = (k(atoms[0])?, k(atoms[1])?);
            expect(whole == k1 * k2, || format!("{name} π={{{pi}}}: k={whole} but factors give {k1}·{k2}"))
        })
        .collect();
    tally(
        "Lemma 15",
        "k(A₁×A₂) = k(A₁)·k(A₂)",
        checks,
    )
}

/// For a minimal normal `A = S₁ × … × S_s` permuted transitively by `G`
/// with `G = HAC_G(A)`: `k^G(A) = k^{N_G(S₁)}(S₁)`.
pub fn transitive_factor_count(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        if f.hall_reps.is_empty() {
            return Vec::new();
        }
        let h = &f.hall_reps[0];
        let mins = match structure::minimal_normal_subgroups(&f.group, ctx) {
            Ok(m) => m,
            Err(e) => return vec![Err(e)],
        };
        mins.iter()
            .filter(|a| !a.is_abelian())
            .map(|a| {
                let factors = structure::simple_direct_factors(&f.group, a, ctx)?;
                let s1 = &factors[0];
                let orbit_size = factors
                    .iter()
                    .filter(|s| is_conjugate_subgroup(&f.group, s1, s))
                    .count();
                if orbit_size != factors.len() {
                    return Ok(None);
                }
                let c = structure::centralizer(&f.group, a, ctx)?;
                if h.join(a).join(&c).order_u128() != f.group.order_u128() {
                    return Ok(None);
                }
                let kg = k_induced(&f.group, a, &f.pi, ctx)?.k_induced;
                let n = structure::normalizer(&f.group, s1, ctx)?;
                let ks = k_induced(&n, s1, &f.pi, ctx)?.k_induced;
                expect(kg == ks, || {
                    format!("{}: k^G(A)={kg} but k^N(S₁)(S₁)={ks} for {} factors", f.label(), factors.len())
                })
            })
            .collect()
    });
    tally(
        "Lemma 16",
        "k^G(A) = k^N_G(S₁)(S₁) for transitively permuted factors",
        checks,
    )
}

/// Whether `t` is a `g`-conjugate of `s`, found by closing the orbit of `s`
/// under the generators (the orbit of a simple factor is small).
fn is_conjugate_subgroup(g: &PermGroup, s: &PermGroup, t: &PermGroup) -> bool {
    let mut orbit = vec![s.clone()];
    let mut head = 0;
    while head < orbit.len() {
        let cur = orbit[head].clone();
        head += 1;
        for x in g.generators() {
            let c = cur.conjugate(x);
            if !orbit.iter().any(|o| o.same_group(&c)) {
                orbit.push(c);
            }
        }
    }
    orbit.iter().any(|o| o.same_group(t))
}

/// The almost simple entries: a unique minimal normal subgroup, nonabelian
/// simple, with trivial centralizer.
fn almost_simple_socle(g: &PermGroup, ctx: &Ctx) -> Result<Option<PermGroup>> {
    let mins = structure::minimal_normal_subgroups(g, ctx)?;
    if mins.len() != 1 || mins[0].is_abelian() || !structure::is_simple(&mins[0], ctx)? {
        return Ok(None);
    }
    let c = structure::centralizer(g, &mins[0], ctx)?;
    Ok(c.is_trivial().then(|| mins[0].clone()))
}

/// The allowed values of `k^G(S)` for an almost simple `G` with socle `S`.
pub fn allowed_socle_counts(pi: &PiSet) -> &'static [usize] {
    if !pi.contains(2) {
        &[1]
    } else if !pi.contains(3) {
        &[1, 2]
    } else {
        &[1, 2, 3, 4, 9]
    }
}

/// Observed socle counts of almost simple `E_π` entries lie in the allowed
/// sets and are π-numbers.
pub fn almost_simple_counts(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        if f.classification.e != Some(true) {
            return Vec::new();
        }
        let r = (|| {
            let Some(s) = almost_simple_socle(&f.group, ctx)? else {
                return Ok(None);
            };
            let k = k_induced(&f.group, &s, &f.pi, ctx)?.k_induced;
            let allowed = allowed_socle_counts(&f.pi);
            Ok(Some(expect(allowed.contains(&k) && is_pi_number(k as u128, &f.pi), || {
                format!("{}: k^G(S)={k} outside {allowed:?} or not a π-number", f.label())
            })?))
        })();
        match r {
            Ok(None) => Vec::new(),
            Ok(Some(c)) => vec![Ok(c)],
            Err(e) => vec![Err(e)],
        }
    });
    tally(
        "Theorem 10",
        "socle class counts of almost simple groups lie in the allowed sets",
        checks,
    )
}

/// Prime sets for the composition-factor comparison.
pub const COMPOSITION_PIS: &[&str] = &["2,5", "3,5", "5,7"];

/// When `2 ∉ π` or `3 ∉ π`, `C_π` is decided by the nonabelian
/// composition factors; compared with the oracle on every corpus group.
pub fn composition_factor_criterion(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let mut groups: Vec<&EntryFacts> = Vec::new();
    for f in facts {
        if !groups.iter().any(|g| g.name == f.name) {
            groups.push(f);
        }
    }
    let jobs: Vec<(&EntryFacts, PiSet)> = groups
        .iter()
        .flat_map(|f| COMPOSITION_PIS.iter().map(move |p| (*f, PiSet::parse(p).expect("valid prime list"))))
        .collect();
    let checks: Vec<Check> = jobs
        .par_iter()
        .map(|(f, pi)| {
            let shortcut = composition_factor_shortcut(&f.group, pi, ctx)?
                .ok_or_else(|| Error::Precondition("criterion requires 2 ∉ π or 3 ∉ π".into()))?;
            let oracle = cpi(&f.group, pi, ctx)?;
            expect(shortcut == oracle, || {
                format!("{} π={{{pi}}}: composition criterion {shortcut}, oracle {oracle}", f.name)
            })
        })
        .collect();
    tally(
        "Corollary 18",
        "composition-factor criterion matches the oracle",
        checks,
    )
}

/// `G` is `C_π` iff `G/A` is and the preimage of a Hall subgroup of `G/A`
/// is; checked both for every and for some Hall subgroup of the quotient.
pub fn quotient_and_preimage(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let checks = par_checks(facts, |f| {
        f.proper_normals()
            .map(|a| {
                let (q, hom) = quotient(&f.group, a, ctx.budget.index)?;
                let q_cpi = cpi(&q, &f.pi, ctx)?;
                let reps = all_hall_classes(&q, &f.pi, ctx)?.class_reps;
                let mut every = true;
                let mut some = false;
                for kbar in &reps {
                    let k = hom.preimage(kbar)?;
                    let c = cpi(&k, &f.pi, ctx)?;
                    every &= c;
                    some |= c;
                }
                let by_every = q_cpi && every;
                let by_some = q_cpi && some;
                expect(by_every == f.is_cpi() && by_some == f.is_cpi(), || {
                    format!(
                        "{}: |A|={} G C_π={} but criterion (every)={by_every} (some)={by_some}",
                        f.label(),
                        a.order_u128(),
                        f.is_cpi()
                    )
                })
            })
            .collect()
    });
    tally(
        "Corollary 2",
        "C_π(G) ⟺ C_π(G/A) and the preimage K of a Hall subgroup is C_π",
        checks,
    )
}

/// Two oracle runs with different seeds give the same classes.
pub fn oracle_seed_independence(facts: &[EntryFacts], ctx: &Ctx) -> SuiteResult {
    let other = Ctx::new(ctx.budget.clone(), ctx.seed.wrapping_add(0x9e37_79b9));
    let checks = par_checks(facts, |f| {
        vec![(|| {
            let a = all_hall_classes(&f.group, &f.pi, ctx)?;
            let b = all_hall_classes(&f.group, &f.pi, &other)?;
            expect(a.class_sizes == b.class_sizes && a.fingerprints == b.fingerprints, || {
                format!("{}: oracle runs with different seeds disagree", f.label())
            })
        })()]
    });
    tally(
        "Oracle seeds",
        "oracle class counts and fingerprints independent of the seed",
        checks,
    )
}

/// The oracle reproduces the frozen manifest expectations.
pub fn manifest_agreement(entries: &[CorpusEntry], facts: &[EntryFacts]) -> SuiteResult {
    let checks = entries
        .iter()
        .zip(facts)
        .map(|(e, f)| {
            let c = &f.classification;
            let x = e.expected;
            expect(
                c.e == Some(x.e) && c.c == Some(x.c) && c.d == Some(x.d) && c.k == Some(x.k),
                || format!("{}: oracle gives E={:?} C={:?} D={:?} k={:?}, manifest {x}", f.label(), c.e, c.c, c.d, c.k),
            )
        })
        .collect();
    tally("Manifest", "oracle reproduces the frozen expectations", checks)
}

/// Runs the reduction and the oracle on every entry.
pub fn compare_all(facts: &[EntryFacts], ctx: &Ctx) -> Vec<Result<Comparison>> {
    facts
        .par_iter()
        .map(|f| compare_with_oracle(&f.group, &f.pi, ctx).map(|(c, _, _)| c))
        .collect()
}

/// The chief-series reduction agrees with the oracle, given the outcome of
/// [`compare_all`].
pub fn reduction_agreement(facts: &[EntryFacts], comparisons: &[Result<Comparison>]) -> SuiteResult {
    let checks = facts
        .iter()
        .zip(comparisons)
        .map(|(f, cmp)| match cmp {
            Ok(cmp) => match cmp.agree {
                Some(ok) => expect(ok, || {
                    format!("{}: reduction {:?}, oracle {:?}", f.label(), cmp.reduction_verdict, cmp.oracle_verdict)
                }),
                None => Err(Error::budget("a pipeline exceeded its budget")),
            },
            Err(e) => Err(e.clone()),
        })
        .collect();
    tally("Reduction", "chief-series reduction agrees with the oracle", checks)
}

/// A named suite body over prepared facts.
pub type SuiteFn = fn(&[EntryFacts], &Ctx) -> SuiteResult;

/// The suites that only need the prepared facts, in table order.
pub const FACT_SUITES: &[SuiteFn] = &[
    hall_intersections_and_images,
    separable_implies_dominance,
    extension_closure,
    normalizers_inherit,
    quotients_inherit,
    induced_iff_invariant,
    induced_count_in_ha,
    single_induced_class,
    product_multiplicativity,
    transitive_factor_count,
    hall_times_normal,
    almost_simple_counts,
    composition_factor_criterion,
    quotient_and_preimage,
    oracle_seed_independence,
];

/// Every suite, in table order.
pub fn run_all(entries: &[CorpusEntry], ctx: &Ctx) -> Result<Vec<SuiteResult>> {
    let facts = prepare(entries, ctx)?;
    let comparisons = compare_all(&facts, ctx);
    let mut out = vec![
        manifest_agreement(entries, &facts),
        reduction_agreement(&facts, &comparisons),
    ];
    out.extend(FACT_SUITES.iter().map(|f| f(&facts, ctx)));
    Ok(out)
}
