//! Normal structure: closures, simplicity, minimal normal subgroups, chief
//! series and the automorphism groups induced on chief sections.

use serde::{Deserialize, Serialize};

use crate::config::Ctx;
use crate::error::{Error, Result};
use crate::group::{factorize, is_prime, PermGroup};
use crate::hom::{action_on_cosets, generating_section_action, Hom};
use crate::perm::Perm;
use crate::search;
use crate::table::{ElementTable, SubTable};
use crate::zoo::gl_order;

pub fn normalizer(g: &PermGroup, h: &PermGroup, ctx: &Ctx) -> Result<PermGroup> {
    search::normalizer(g, h, ctx.budget.nodes)
}

pub fn centralizer(g: &PermGroup, h: &PermGroup, ctx: &Ctx) -> Result<PermGroup> {
    search::centralizer(g, h, ctx.budget.nodes)
}

pub fn center(g: &PermGroup, ctx: &Ctx) -> Result<PermGroup> {
    centralizer(g, g, ctx)
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Perm]) -> PermGroup {
    let mut n = PermGroup::from_gens_unchecked(g.degree(), s.to_vec());
    loop {
        let mut grew = false;
        let current: Vec<Perm> = n.generators().to_vec();
        for x in &current {
            for y in g.generators() {
                let c = x.conjugate(y);
                if !n.contains(&c) {
                    n = n.with_element(&c);
                    grew = true;
                }
            }
        }
        if !grew {
            return n;
        }
    }
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = gens[i].commutator(&gens[j]);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// `G = D_0 > D_1 > ...` down to the first perfect term.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut out = vec![g.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let d = derived_subgroup(last);
        if d.order_u128() == last.order_u128() {
            return out;
        }
        out.push(d);
    }
}

/// The group induced on a set of points (which must be a union of orbits),
/// relabelled as `0..pts.len()` in the given order.
pub fn restrict_to_points(g: &PermGroup, pts: &[u32]) -> PermGroup {
    let mut pos = vec![u32::MAX; g.degree()];
    for (i, &p) in pts.iter().enumerate() {
        pos[p as usize] = i as u32;
    }
    let gens = g
        .generators()
        .iter()
        .map(|x| {
            Perm::from_vec_unchecked(pts.iter().map(|&p| pos[x.apply(p) as usize]).collect())
        })
        .collect();
    PermGroup::from_gens_unchecked(pts.len(), gens)
}

fn is_two_transitive(g: &PermGroup) -> Result<bool> {
    if g.orbit(0)?.len() != g.degree() {
        return Ok(false);
    }
    if g.degree() <= 2 {
        return Ok(true);
    }
    let st = g.stabilizer(0)?;
    Ok(st.orbit(1)?.len() == g.degree() - 1)
}

/// Whether a transitive group of this degree and order could have a regular
/// normal elementary abelian subgroup.
fn could_be_affine(degree: usize, order: u128) -> bool {
    let f = factorize(degree as u64);
    if f.len() != 1 {
        return false;
    }
    let (p, d) = f[0];
    let pd = (p as u128).pow(d);
    match gl_order(d, p).checked_mul(pd) {
        Some(agl) => order <= agl,
        None => true,
    }
}

/// Simplicity test. Small groups are decided exhaustively through normal
/// closures of class representatives; large ones through a faithful orbit
/// and 2-transitivity (a perfect 2-transitive group that is not affine is
/// simple, using Burnside's theorem and the solvability of outer
/// automorphism groups).
pub fn is_simple(g: &PermGroup, ctx: &Ctx) -> Result<bool> {
    let n = g.order_u128();
    if n <= 1 {
        return Ok(false);
    }
    if is_prime(n as u64) && n <= u64::MAX as u128 {
        return Ok(true);
    }
    if g.is_abelian() {
        return Ok(false);
    }
    if derived_subgroup(g).order_u128() != n {
        return Ok(false);
    }
    if n <= ctx.budget.order {
        let mins = minimal_normal_in(g, g, ctx)?;
        return Ok(mins.len() == 1 && mins[0].order_u128() == n);
    }
    let orbits = g.orbits();
    if orbits.len() > 1 {
        if let Some(o) = orbits.iter().find(|o| o.len() > 1) {
            let r = restrict_to_points(g, o);
            return if r.order_u128() == n {
                is_simple(&r, ctx)
            } else {
                // the kernel of this restriction is proper and nontrivial
                Ok(false)
            };
        }
    }
    if is_two_transitive(g)? && !could_be_affine(g.degree(), n) {
        return Ok(true);
    }
    Err(Error::budget(format!(
        "simplicity of a group of order {n} is beyond the exhaustive budget"
    )))
}

fn prime_order_class_reps(g: &PermGroup, m: &PermGroup, ctx: &Ctx) -> Result<Vec<Perm>> {
    let t = ElementTable::new(m, ctx.budget.order)?;
    let maps = t.conjugation_maps(g.generators());
    let cls = t.classes(&maps, None);
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    for r in 0..t.len() as u32 {
        if seen.insert(cls[r as usize]) && is_prime(t.element_order(r)) {
            reps.push(t.perm(r));
        }
    }
    Ok(reps)
}

fn sort_key(h: &PermGroup) -> (u128, Vec<Vec<u32>>) {
    let mut gens: Vec<Vec<u32>> = h.generators().iter().map(|x| x.images().to_vec()).collect();
    gens.sort();
    (h.order_u128(), gens)
}

/// Minimal normal subgroups of `g` contained in the normal subgroup `m`,
/// ordered by order and then by generators.
pub fn minimal_normal_in(g: &PermGroup, m: &PermGroup, ctx: &Ctx) -> Result<Vec<PermGroup>> {
    if m.is_trivial() {
        return Ok(Vec::new());
    }
    let mut out: Vec<PermGroup> = if m.order_u128() <= ctx.budget.order {
        let mut closures: Vec<PermGroup> = Vec::new();
        for x in prime_order_class_reps(g, m, ctx)? {
            let n = normal_closure(g, &[x]);
            if !closures.iter().any(|c| c.same_group(&n)) {
                closures.push(n);
            }
        }
        closures
            .iter()
            .filter(|c| {
                !closures
                    .iter()
                    .any(|d| d.order_u128() < c.order_u128() && c.is_subgroup(d))
            })
            .map(|c| c.reduced())
            .collect()
    } else {
        large_minimal_normal(g, m, ctx)?
    };
    out.sort_by_key(sort_key);
    Ok(out)
}

fn large_minimal_normal(g: &PermGroup, m: &PermGroup, ctx: &Ctx) -> Result<Vec<PermGroup>> {
    let series = derived_series(m);
    let d = series.last().expect("nonempty").clone();
    if d.is_trivial() {
        return Err(Error::budget(format!(
            "minimal normal subgroups of a large solvable group of order {}",
            m.order_u128()
        )));
    }
    if !is_simple(&d, ctx)? {
        return Err(Error::budget(format!(
            "minimal normal subgroups inside a non-simple perfect group of order {}",
            d.order_u128()
        )));
    }
    // every other minimal normal subgroup centralizes d
    let c = centralizer(g, &d, ctx)?;
    let mut out = vec![d];
    if !c.is_trivial() {
        let rest = search::intersection(&c, m, ctx.budget.nodes)?;
        out.extend(minimal_normal_in(g, &rest, ctx)?);
    }
    Ok(out)
}

pub fn minimal_normal_subgroups(g: &PermGroup, ctx: &Ctx) -> Result<Vec<PermGroup>> {
    minimal_normal_in(g, g, ctx)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiefFactor {
    pub order: u128,
    pub abelian: bool,
    /// Subgroups of the upper term whose images modulo the lower term are
    /// the simple direct factors of the chief factor.
    #[serde(skip)]
    pub simple_factors: Vec<PermGroup>,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub group: PermGroup,
    /// `terms[0] = G > terms[1] > ... > terms[n] = 1`.
    pub terms: Vec<PermGroup>,
    /// `factors[i]` describes `terms[i] / terms[i + 1]`.
    pub factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Simple direct factors of a minimal normal subgroup `m` of `q`.
fn split_minimal_normal(q: &PermGroup, m: &PermGroup, ctx: &Ctx) -> Result<Vec<PermGroup>> {
    let _ = q;
    if m.is_abelian() {
        let target = m.order_u128();
        let mut basis: Vec<Perm> = Vec::new();
        let mut span = PermGroup::trivial(m.degree());
        for x in m.chain().strong_generators() {
            if span.order_u128() == target {
                break;
            }
            if !span.contains(x) {
                basis.push(x.clone());
                span = span.with_element(x);
            }
        }
        return Ok(basis
            .into_iter()
            .map(|x| PermGroup::from_gens_unchecked(m.degree(), vec![x]))
            .collect());
    }
    if is_simple(m, ctx)? {
        return Ok(vec![m.clone()]);
    }
    minimal_normal_in(m, m, ctx)
}

/// Chief series built from the bottom: at each step the chosen minimal
/// normal subgroup of the current quotient is the one of smallest order,
/// ties broken by generators.
pub fn chief_series(g: &PermGroup, ctx: &Ctx) -> Result<ChiefSeries> {
    if g.order_u128() <= ctx.budget.order {
        return table_chief_series(g, ctx);
    }
    chief_series_by_quotients(g, ctx)
}

/// Smallest subgroup containing `base` and `x` that is normalized by the
/// elements whose conjugation maps are `maps`.
fn table_normal_closure(t: &ElementTable, maps: &[Vec<u32>], base: &SubTable, x: u32) -> SubTable {
    let mut cur = t.extend(base, &[x], usize::MAX).expect("no size limit");
    loop {
        let missing: Vec<u32> = cur
            .gens
            .iter()
            .flat_map(|&y| maps.iter().map(move |m| m[y as usize]))
            .filter(|&z| !cur.bits.contains(z))
            .collect();
        if missing.is_empty() {
            return cur;
        }
        cur = t.extend(&cur, &missing, usize::MAX).expect("no size limit");
    }
}

/// All normal subgroups of `g`, ordered by order and then by generators.
/// Every normal subgroup is a join of normal closures of single elements,
/// so the joins of those closures are enumerated breadth-first.
pub fn normal_subgroups(g: &PermGroup, ctx: &Ctx) -> Result<Vec<PermGroup>> {
    let t = ElementTable::new(g, ctx.budget.order)?;
    let maps = t.conjugation_maps(g.generators());
    let class = t.classes(&maps, None);
    let trivial = t.trivial();
    let mut seen_class = std::collections::HashSet::new();
    let mut closures: Vec<SubTable> = Vec::new();
    for x in 0..t.len() as u32 {
        if !seen_class.insert(class[x as usize]) || trivial.bits.contains(x) {
            continue;
        }
        let c = table_normal_closure(&t, &maps, &trivial, x);
        if !closures.iter().any(|d| d.bits == c.bits) {
            closures.push(c);
        }
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(trivial.bits.clone());
    let mut all = vec![trivial];
    let mut head = 0;
    while head < all.len() {
        let cur = all[head].clone();
        head += 1;
        for c in &closures {
            if c.bits.is_subset(&cur.bits) {
                continue;
            }
            let j = t.extend(&cur, &c.gens, usize::MAX).expect("no size limit");
            if seen.insert(j.bits.clone()) {
                if all.len() as u64 >= ctx.budget.nodes {
                    return Err(Error::budget("normal subgroup enumeration"));
                }
                all.push(j);
            }
        }
    }
    let mut out: Vec<PermGroup> = all.iter().map(|s| t.to_group(s).reduced()).collect();
    out.sort_by_key(sort_key);
    Ok(out)
}

/// Simple direct factors of a minimal normal subgroup `m` of `g` (cyclic
/// factors of a basis when `m` is abelian).
pub fn simple_direct_factors(g: &PermGroup, m: &PermGroup, ctx: &Ctx) -> Result<Vec<PermGroup>> {
    split_minimal_normal(g, m, ctx)
}

/// Subgroups strictly above `n` that are minimal among the normal closures
/// over `n` of single elements of `within`.
fn minimal_closures_over(
    t: &ElementTable,
    maps: &[Vec<u32>],
    n: &SubTable,
    within: &SubTable,
) -> Vec<SubTable> {
    let mut covered = n.bits.clone();
    let mut cands: Vec<SubTable> = Vec::new();
    for &x in &within.elems {
        if covered.contains(x) {
            continue;
        }
        let c = table_normal_closure(t, maps, n, x);
        // every element of a class generates the same closure
        let mut stack = vec![x];
        covered.insert(x);
        while let Some(y) = stack.pop() {
            for m in maps {
                let z = m[y as usize];
                if covered.insert(z) {
                    stack.push(z);
                }
            }
        }
        if !cands.iter().any(|d| d.bits == c.bits) {
            cands.push(c);
        }
    }
    let least = cands.iter().map(|c| c.order()).min().unwrap_or(0);
    cands.retain(|c| c.order() == least);
    cands
}

fn table_chief_series(g: &PermGroup, ctx: &Ctx) -> Result<ChiefSeries> {
    let t = ElementTable::new(g, ctx.budget.order)?;
    let maps = t.conjugation_maps(g.generators());
    let all = t.subgroup(g)?;
    let mut n = t.trivial();
    let mut terms_up = vec![PermGroup::trivial(g.degree())];
    let mut factors_up = Vec::new();
    while n.order() < t.len() {
        let m = minimal_closures_over(&t, &maps, &n, &all)
            .into_iter()
            .next()
            .expect("a proper normal subgroup has a minimal normal cover");
        let mgens: Vec<Perm> = m.gens.iter().map(|&r| t.perm(r)).collect();
        let abelian = mgens
            .iter()
            .all(|a| mgens.iter().all(|b| n.bits.contains(t.rank_of(&a.commutator(b)).expect("in group"))));
        let pieces: Vec<SubTable> = if abelian {
            let mut span = n.clone();
            let mut out = Vec::new();
            for &x in &m.elems {
                if !span.bits.contains(x) {
                    out.push(t.extend(&n, &[x], usize::MAX).expect("no size limit"));
                    span = t.extend(&span, &[x], usize::MAX).expect("no size limit");
                }
            }
            out
        } else {
            let mmaps = t.conjugation_maps(&mgens);
            minimal_closures_over(&t, &mmaps, &n, &m)
        };
        factors_up.push(ChiefFactor {
            order: (m.order() / n.order()) as u128,
            abelian,
            simple_factors: pieces.iter().map(|p| t.to_group(p).reduced()).collect(),
        });
        terms_up.push(t.to_group(&m).reduced());
        n = m;
    }
    terms_up.reverse();
    factors_up.reverse();
    Ok(ChiefSeries {
        group: g.clone(),
        terms: terms_up,
        factors: factors_up,
    })
}

fn chief_series_by_quotients(g: &PermGroup, ctx: &Ctx) -> Result<ChiefSeries> {
    let total = g.order_u128();
    let mut terms_up = vec![PermGroup::trivial(g.degree())];
    let mut factors_up = Vec::new();
    let mut n = PermGroup::trivial(g.degree());
    while n.order_u128() < total {
        let (q, hom): (PermGroup, Option<Hom>) = if n.is_trivial() {
            (g.clone(), None)
        } else {
            let act = action_on_cosets(g, &n, ctx.budget.index)?;
            (act.image, Some(act.hom))
        };
        let mins = minimal_normal_in(&q, &q, ctx)?;
        let pick = mins
            .into_iter()
            .next()
            .ok_or_else(|| Error::Verification("nontrivial group without minimal normal subgroup".into()))?;
        let pieces = split_minimal_normal(&q, &pick, ctx)?;
        let lift = |x: &PermGroup| -> Result<PermGroup> {
            match &hom {
                None => Ok(x.clone()),
                Some(h) => Ok(h.preimage(x)?.reduced()),
            }
        };
        let m = lift(&pick)?;
        let simple_factors = pieces.iter().map(lift).collect::<Result<Vec<_>>>()?;
        factors_up.push(ChiefFactor {
            order: pick.order_u128(),
            abelian: pick.is_abelian(),
            simple_factors,
        });
        terms_up.push(m.clone());
        n = m;
    }
    terms_up.reverse();
    factors_up.reverse();
    Ok(ChiefSeries {
        group: g.clone(),
        terms: terms_up,
        factors: factors_up,
    })
}

/// Simple direct factors of `terms[i-1] / terms[i]` (1-based `i`).
pub fn chief_factor_decomposition(series: &ChiefSeries, i: usize) -> Result<Vec<PermGroup>> {
    if i == 0 || i > series.len() {
        return Err(Error::Precondition(format!(
            "factor index {i} outside 1..={}",
            series.len()
        )));
    }
    Ok(series.factors[i - 1].simple_factors.clone())
}

/// Checks that each term is normal, the terms strictly decrease, the orders
/// multiply up, and no normal subgroup of the group lies strictly between
/// consecutive terms.
pub fn verify_chief_series(series: &ChiefSeries, ctx: &Ctx) -> Result<()> {
    let g = &series.group;
    let mut prod = 1u128;
    for (i, f) in series.factors.iter().enumerate() {
        let (upper, lower) = (&series.terms[i], &series.terms[i + 1]);
        if !upper.is_normal_in(g) || !upper.is_subgroup(lower) {
            return Err(Error::Verification(format!("term {i} is not normal or not nested")));
        }
        if upper.order_u128() != f.order * lower.order_u128() || f.order == 1 {
            return Err(Error::Verification(format!("factor {} has wrong order", i + 1)));
        }
        prod *= f.order;
        if g.order_u128() <= ctx.budget.order {
            // minimality: every element of upper outside lower has normal
            // closure (together with lower) equal to upper
            let t = ElementTable::new(g, ctx.budget.order)?;
            let maps = t.conjugation_maps(g.generators());
            let (up, low) = (t.subgroup(upper)?, t.subgroup(lower)?);
            let mins = minimal_closures_over(&t, &maps, &low, &up);
            if mins.len() != 1 || mins[0].bits != up.bits {
                return Err(Error::Verification(format!(
                    "factor {} is not a minimal normal subgroup of the quotient",
                    i + 1
                )));
            }
            continue;
        }
        // minimality: in G / lower, the image of upper is a minimal normal subgroup
        let (q, hom) = if lower.is_trivial() {
            (g.clone(), None)
        } else {
            let act = action_on_cosets(g, lower, ctx.budget.index)?;
            (act.image, Some(act.hom))
        };
        let image = match &hom {
            None => upper.clone(),
            Some(h) => h.image_group(upper)?,
        };
        let mins = minimal_normal_in(&q, &image, ctx)?;
        if mins.len() != 1 || mins[0].order_u128() != image.order_u128() {
            return Err(Error::Verification(format!(
                "factor {} is not a minimal normal subgroup of the quotient",
                i + 1
            )));
        }
    }
    if prod != g.order_u128() {
        return Err(Error::Verification("factor orders do not multiply to |G|".into()));
    }
    Ok(())
}

/// How a section representation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutomizerStrategy {
    ElementAction,
    AmbientGroup,
    CosetsOfCentralizer,
}

/// `Aut_G(A/B)`: the automorphisms of the section `A/B` induced by
/// conjugation with elements of `G`, as a faithful permutation group.
#[derive(Clone, Debug)]
pub struct InducedAutomizer {
    pub ambient: PermGroup,
    pub section_image: PermGroup,
    pub inner_image: PermGroup,
    pub projection: Hom,
    pub strategy: AutomizerStrategy,
}

/// `b <= a` normal, both normalized by `g`.
pub fn induced_automizer(
    g: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    ctx: &Ctx,
) -> Result<InducedAutomizer> {
    if !b.is_normal_in(a) || !a.is_normal_in(g) || !b.is_normal_in(g) {
        return Err(Error::NotNormal(
            "section must be normalized by the ambient group".into(),
        ));
    }
    let section = a.order_u128() / b.order_u128();
    if section <= ctx.budget.section as u128 + 1 {
        let (image, hom) = generating_section_action(g, a, b, ctx.budget.section)?;
        let inner = hom.image_group(a)?;
        return Ok(InducedAutomizer {
            ambient: g.clone(),
            section_image: image,
            inner_image: inner,
            projection: hom,
            strategy: AutomizerStrategy::ElementAction,
        });
    }
    if b.is_trivial() {
        let c = centralizer(g, a, ctx)?;
        if c.is_trivial() {
            let hom = Hom::from_images(g, g, g.generators().to_vec())?;
            return Ok(InducedAutomizer {
                ambient: g.clone(),
                section_image: g.clone(),
                inner_image: a.clone(),
                projection: hom,
                strategy: AutomizerStrategy::AmbientGroup,
            });
        }
        let act = action_on_cosets(g, &c, ctx.budget.index)?;
        let inner = act.hom.image_group(a)?;
        return Ok(InducedAutomizer {
            ambient: g.clone(),
            section_image: act.image,
            inner_image: inner,
            projection: act.hom,
            strategy: AutomizerStrategy::CosetsOfCentralizer,
        });
    }
    Err(Error::budget(format!(
        "no representation of a section of order {section} within budget"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn ctx() -> Ctx {
        Ctx::default()
    }

    fn brute_normal_subgroups(g: &PermGroup) -> Vec<u128> {
        // orders of normal closures of all single elements and pairs: enough
        // for the small groups tested here
        let els = g.elements();
        let mut out = Vec::new();
        for x in &els {
            let n = normal_closure(g, std::slice::from_ref(x));
            out.push(n.order_u128());
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn closures_and_derived() {
        let a5 = zoo::alt(5);
        let x = Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        assert_eq!(normal_closure(&a5, &[x]).order_u128(), 60);
        assert!(derived_subgroup(&zoo::sym(4)).same_group(&zoo::alt(4)));
        assert_eq!(center(&zoo::dihedral(4), &ctx()).unwrap().order_u128(), 2);
    }

    #[test]
    fn simplicity() {
        let c = ctx();
        assert!(is_simple(&zoo::cyclic(7), &c).unwrap());
        assert!(is_simple(&zoo::alt(5), &c).unwrap());
        assert!(!is_simple(&zoo::sym(4), &c).unwrap());
        assert!(is_simple(&zoo::psl2(7).unwrap(), &c).unwrap());
        assert!(!is_simple(&zoo::direct_product(&zoo::alt(5), &zoo::alt(5)), &c).unwrap());
        assert!(is_simple(&zoo::gl(5, 2).unwrap(), &c).unwrap());
        assert_eq!(brute_normal_subgroups(&zoo::alt(5)), vec![1, 60]);
    }

    #[test]
    fn minimal_normals() {
        let c = ctx();
        let m = minimal_normal_subgroups(&zoo::sym(4), &c).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order_u128(), 4);
        let g = zoo::direct_product(&zoo::alt(5), &zoo::alt(5));
        let m = minimal_normal_subgroups(&g, &c).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|x| x.order_u128() == 60));
        let m = minimal_normal_subgroups(&zoo::alt(5), &c).unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn normal_subgroup_enumeration_matches_brute_force() {
        // every subgroup of these groups is 2-generated, so filtering all
        // 2-generated subgroups for normality finds every normal subgroup
        for g in [zoo::sym(4), zoo::dihedral(6), zoo::cyclic(12), zoo::alt(4), zoo::dihedral(4)] {
            let els = g.elements();
            let mut brute: Vec<Vec<Perm>> = Vec::new();
            for x in &els {
                for y in &els {
                    let h = g.subgroup(vec![x.clone(), y.clone()]);
                    if h.is_normal_in(&g) {
                        let mut e = h.elements();
                        e.sort_by(|a, b| a.images().cmp(b.images()));
                        if !brute.contains(&e) {
                            brute.push(e);
                        }
                    }
                }
            }
            let found = normal_subgroups(&g, &ctx()).unwrap();
            assert_eq!(found.len(), brute.len(), "{g:?}");
            for n in &found {
                assert!(n.is_normal_in(&g));
            }
        }
        assert_eq!(normal_subgroups(&zoo::sym(4), &ctx()).unwrap().iter().map(|n| n.order_u128()).collect::<Vec<_>>(), vec![1, 4, 12, 24]);
    }

    #[test]
    fn chief_series_of_s4() {
        let c = ctx();
        let s = chief_series(&zoo::sym(4), &c).unwrap();
        let orders: Vec<u128> = s.factors.iter().map(|f| f.order).collect();
        assert_eq!(orders, vec![2, 3, 4]);
        verify_chief_series(&s, &c).unwrap();
        assert_eq!(chief_factor_decomposition(&s, 3).unwrap().len(), 2);
        assert!(s.factors.iter().all(|f| f.abelian));
    }

    #[test]
    fn chief_series_of_wreath() {
        let c = ctx();
        let g = zoo::wreath(&zoo::alt(5), 2);
        let s = chief_series(&g, &c).unwrap();
        let orders: Vec<u128> = s.factors.iter().map(|f| f.order).collect();
        assert_eq!(orders, vec![2, 3600]);
        let parts = chief_factor_decomposition(&s, 2).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.order_u128() == 60));
        verify_chief_series(&s, &c).unwrap();
    }

    #[test]
    fn automizers() {
        let c = ctx();
        let s4 = zoo::sym(4);
        let v = s4.subgroup(vec![
            Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ]);
        let a = induced_automizer(&s4, &v, &PermGroup::trivial(4), &c).unwrap();
        assert_eq!(a.section_image.order_u128(), 6);
        let s5 = zoo::sym(5);
        let a = induced_automizer(&s5, &zoo::alt(5), &PermGroup::trivial(5), &c).unwrap();
        assert_eq!(a.section_image.order_u128(), 120);
        assert_eq!(a.inner_image.order_u128(), 60);
        assert!(a.inner_image.is_normal_in(&a.section_image));
        let a = induced_automizer(&s5, &s5, &s5, &c).unwrap();
        assert_eq!(a.section_image.order_u128(), 1);
    }
}
