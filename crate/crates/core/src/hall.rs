//! π-numbers, Hall subgroups, and the exhaustive Hall-class oracle.
//!
//! The oracle works on an explicit element table: every Hall subgroup of a
//! small group contains a conjugate of a fixed Sylow subgroup `P`, so it
//! suffices to enumerate the π-overgroups of `P` and close them under
//! conjugation.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::config::Ctx;
use crate::error::{Error, Result};
use crate::fingerprint::Fingerprint;
use crate::group::{is_prime, PermGroup};
use crate::hom::Hom;
use crate::perm::Perm;
use crate::search;
use crate::structure;
use crate::table::{Bits, ElementTable, SubTable};

/// A nonempty set of primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PiSet(BTreeSet<u64>);

impl PiSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<PiSet> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidPi("empty prime set".into()));
        }
        if let Some(&bad) = set.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidPi(format!("{bad} is not prime")));
        }
        Ok(PiSet(set))
    }

    /// Parses a comma-separated list such as `"2,3"`.
    pub fn parse(csv: &str) -> Result<PiSet> {
        let mut primes = Vec::new();
        for (i, tok) in csv.split(',').enumerate() {
            let tok = tok.trim();
            let p: u64 = tok
                .parse()
                .map_err(|_| Error::InvalidPi(format!("entry {} ({tok:?}) is not an integer", i + 1)))?;
            primes.push(p);
        }
        PiSet::new(primes)
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    /// The primes of π dividing `n`.
    pub fn dividing(&self, n: u128) -> Vec<u64> {
        self.primes().filter(|&p| n.is_multiple_of(p as u128)).collect()
    }
}

impl TryFrom<Vec<u64>> for PiSet {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<PiSet> {
        PiSet::new(v)
    }
}

impl From<PiSet> for Vec<u64> {
    fn from(p: PiSet) -> Vec<u64> {
        p.0.into_iter().collect()
    }
}

impl fmt::Display for PiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for PiSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<PiSet> {
        PiSet::parse(s)
    }
}

/// A verdict that keeps "ran out of budget" distinct from "false".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    BudgetExceeded,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// `None` means the value could not be established within budget.
    pub fn from_option(b: Option<bool>) -> Verdict {
        b.map_or(Verdict::BudgetExceeded, Verdict::from_bool)
    }

    /// Budget errors become `BudgetExceeded`; other errors propagate.
    pub fn from_result(r: Result<bool>) -> Result<Verdict> {
        match r {
            Ok(b) => Ok(Verdict::from_bool(b)),
            Err(e) if e.is_budget() => Ok(Verdict::BudgetExceeded),
            Err(e) => Err(e),
        }
    }

    pub fn known(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::BudgetExceeded => None,
        }
    }
}

/// The largest divisor of `n` whose prime divisors lie in π.
pub fn pi_part(n: u128, pi: &PiSet) -> u128 {
    let mut out = 1;
    let mut n = n;
    for p in pi.primes() {
        let p = p as u128;
        while n != 0 && n.is_multiple_of(p) {
            n /= p;
            out *= p;
        }
    }
    out
}

pub fn pi_part_big(n: &BigUint, pi: &PiSet) -> BigUint {
    let mut out = BigUint::one();
    let mut n = n.clone();
    for p in pi.primes() {
        let p = BigUint::from(p);
        while !n.is_zero() && (&n % &p).is_zero() {
            n /= &p;
            out *= &p;
        }
    }
    out
}

pub fn is_pi_number(n: u128, pi: &PiSet) -> bool {
    n != 0 && pi_part(n, pi) == n
}

/// `n` has no prime divisor in π.
pub fn is_pi_prime_number(n: u128, pi: &PiSet) -> bool {
    n != 0 && pi_part(n, pi) == 1
}

/// Whether `h` is a π-Hall subgroup of `g`.
pub fn is_hall(g: &PermGroup, h: &PermGroup, pi: &PiSet) -> Result<bool> {
    if !g.try_is_subgroup(h)? {
        return Err(Error::NotSubgroup("candidate is not contained in the group".into()));
    }
    Ok(h.order_u128() == pi_part(g.order_u128(), pi))
}

/// A Sylow `p`-subgroup, by ascending through normalizers with seeded
/// random `p`-elements.
pub fn sylow(g: &PermGroup, p: u64, ctx: &Ctx) -> Result<PermGroup> {
    let pp = PiSet::new([p])?;
    let target = pi_part(g.order_u128(), &pp);
    let mut cur = PermGroup::trivial(g.degree());
    let mut n = g.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    while cur.order_u128() < target {
        let mut grown = false;
        for _ in 0..4096 {
            let x = n.random_element(&mut rng);
            let o = x.order() as u128;
            let y = x.pow((o / pi_part(o, &pp)) as u64);
            if y.is_identity() || cur.contains(&y) {
                continue;
            }
            // `y` normalizes `cur`, so `<cur, y>` is again a p-group
            cur = cur.with_element(&y).reduced();
            grown = true;
            break;
        }
        if !grown {
            return Err(Error::budget(format!("no {p}-element found outside the current {p}-subgroup")));
        }
        if cur.order_u128() < target {
            n = search::normalizer(g, &cur, ctx.budget.nodes)?;
        }
    }
    Ok(cur)
}

/// All π-Hall subgroups of a small group, as bitsets over its element table.
#[derive(Clone, Debug)]
pub struct HallEnumeration {
    pub table: ElementTable,
    /// Conjugation maps by the generators of the group.
    pub maps: Vec<Vec<u32>>,
    pub hall_order: usize,
    /// Every Hall subgroup, grouped by class in `class_of` order.
    pub all: Vec<Bits>,
    pub class_of: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// A π-element list (ranks), shared with the dominance check.
    pub pi_elements: Vec<u32>,
}

impl HallEnumeration {
    pub fn exists(&self) -> bool {
        !self.all.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// One subgroup per class.
    pub fn class_reps(&self) -> Vec<PermGroup> {
        (0..self.class_count())
            .map(|c| {
                let i = self.class_of.iter().position(|&k| k == c).expect("nonempty class");
                self.table.to_group(&self.table.from_bits(&self.all[i]))
            })
            .collect()
    }
}

fn table_sylow(t: &ElementTable, p: u64, target: usize) -> SubTable {
    let pp = PiSet::new([p]).expect("prime");
    let mut u = t.trivial();
    loop {
        let before = u.order();
        for r in 0..t.len() as u32 {
            if u.order() == target {
                return u;
            }
            let o = t.element_order(r) as u128;
            if o == 1 || !is_pi_number(o, &pp) || u.bits.contains(r) {
                continue;
            }
            if let Some(v) = t.extend(&u, &[r], target) {
                if is_pi_number(v.order() as u128, &pp) {
                    u = v;
                }
            }
        }
        if u.order() == target || u.order() == before {
            return u;
        }
    }
}

/// Marks the cosets `U x` and `x U`, whose elements all generate `<U, x>`
/// together with `U`.
fn cover(t: &ElementTable, u: &SubTable, x: u32, covered: &mut Bits) {
    for &e in &u.elems {
        covered.insert(t.mul(e, x));
        covered.insert(t.mul(x, e));
    }
}

/// Enumerates all π-Hall subgroups of `g` (at most `first_only` classes when
/// set, for existence queries).
pub fn enumerate_halls(g: &PermGroup, pi: &PiSet, ctx: &Ctx, first_only: bool) -> Result<HallEnumeration> {
    let table = ElementTable::new(g, ctx.budget.order)?;
    let maps = table.conjugation_maps(g.generators());
    let order = table.len();
    let m = pi_part(order as u128, pi) as usize;
    let pi_elements: Vec<u32> = (0..order as u32)
        .filter(|&r| is_pi_number(table.element_order(r) as u128, pi))
        .collect();
    let mut found: Vec<Bits> = Vec::new();
    if m == 1 {
        found.push(table.trivial().bits);
    } else if m == order {
        found.push(table.from_bits(&full_bits(order)).bits);
    } else {
        let (p, pm) = pi
            .dividing(order as u128)
            .into_iter()
            .map(|p| (p, pi_part(order as u128, &PiSet::new([p]).expect("prime"))))
            .max_by_key(|&(p, pm)| (pm, std::cmp::Reverse(p)))
            .expect("m > 1");
        let sylow = table_sylow(&table, p, pm as usize);
        let mut seen: HashSet<Bits> = HashSet::new();
        seen.insert(sylow.bits.clone());
        let mut queue = vec![sylow];
        let mut head = 0;
        let mut closures: u64 = 0;
        while head < queue.len() {
            let u = queue[head].clone();
            head += 1;
            if u.order() == m {
                found.push(u.bits.clone());
                if first_only {
                    break;
                }
                continue;
            }
            let mut covered = u.bits.clone();
            for &x in &pi_elements {
                if covered.contains(x) {
                    continue;
                }
                cover(&table, &u, x, &mut covered);
                closures += 1;
                if closures > ctx.budget.nodes {
                    return Err(Error::budget("Hall overgroup enumeration"));
                }
                let Some(v) = table.extend(&u, &[x], m) else { continue };
                if !m.is_multiple_of(v.order()) {
                    continue;
                }
                if seen.insert(v.bits.clone()) {
                    queue.push(v);
                }
            }
        }
    }
    let mut all: Vec<Bits> = Vec::new();
    let mut class_of = Vec::new();
    let mut class_sizes = Vec::new();
    let mut known: HashSet<Bits> = HashSet::new();
    for h in &found {
        if known.contains(h) {
            continue;
        }
        let orbit = table.subgroup_orbit(h, &maps);
        let c = class_sizes.len();
        class_sizes.push(orbit.len());
        for o in orbit {
            known.insert(o.clone());
            all.push(o);
            class_of.push(c);
        }
    }
    Ok(HallEnumeration {
        table,
        maps,
        hall_order: m,
        all,
        class_of,
        class_sizes,
        pi_elements,
    })
}

fn full_bits(n: usize) -> Bits {
    let mut b = Bits::new(n);
    for r in 0..n as u32 {
        b.insert(r);
    }
    b
}

/// Hall classes of a small group, as reported by the oracle.
#[derive(Clone, Debug)]
pub struct HallClassSet {
    pub pi: PiSet,
    pub hall_order: u128,
    pub class_reps: Vec<PermGroup>,
    pub class_sizes: Vec<usize>,
    pub fingerprints: Vec<Fingerprint>,
    /// Whether every Hall subgroup was enumerated.
    pub exhaustive: bool,
}

/// Brute-force enumeration of the conjugacy classes of π-Hall subgroups,
/// sorted by fingerprint. Errors with a budget error on groups larger than
/// the element-table budget.
pub fn all_hall_classes(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<HallClassSet> {
    let e = enumerate_halls(g, pi, ctx, false)?;
    let reps = e.class_reps();
    let mut rows: Vec<(Fingerprint, usize, PermGroup)> = reps
        .into_iter()
        .zip(e.class_sizes.iter().copied())
        .map(|(h, s)| (Fingerprint::of(g, &h), s, h))
        .collect();
    rows.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    Ok(HallClassSet {
        pi: pi.clone(),
        hall_order: e.hall_order as u128,
        fingerprints: rows.iter().map(|r| r.0.clone()).collect(),
        class_sizes: rows.iter().map(|r| r.1).collect(),
        class_reps: rows.into_iter().map(|r| r.2).collect(),
        exhaustive: true,
    })
}

/// Some π-Hall subgroup of `g`, or `None` when there is none.
pub fn find_hall(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<Option<PermGroup>> {
    let order = g.order_u128();
    let m = pi_part(order, pi);
    if m == 1 {
        return Ok(Some(PermGroup::trivial(g.degree())));
    }
    if m == order {
        return Ok(Some(g.clone()));
    }
    if let Some(case) = ctx.special_case(g, pi) {
        if let Some(h) = &case.hall {
            return Ok(Some(h.clone()));
        }
    }
    let primes = pi.dividing(order);
    if primes.len() == 1 {
        return Ok(Some(sylow(g, primes[0], ctx)?));
    }
    let e = enumerate_halls(g, pi, ctx, true)?;
    Ok(e.class_reps().into_iter().next())
}

#[derive(Clone, Debug)]
pub enum Conjugacy {
    Conjugate(Perm),
    /// Distinguished by a conjugation invariant.
    FingerprintsDiffer(Box<(Fingerprint, Fingerprint)>),
    /// The backtrack search found no conjugating element.
    SearchExhausted,
}

impl Conjugacy {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Conjugacy::Conjugate(_))
    }
}

/// Decides `G`-conjugacy of two subgroups of `g`.
pub fn are_conjugate(g: &PermGroup, h: &PermGroup, k: &PermGroup, ctx: &Ctx) -> Result<Conjugacy> {
    let (fh, fk) = (Fingerprint::of(g, h), Fingerprint::of(g, k));
    if fh != fk {
        return Ok(Conjugacy::FingerprintsDiffer(Box::new((fh, fk))));
    }
    Ok(match search::conjugating_element(g, h, k, ctx.budget.nodes)? {
        Some(x) => Conjugacy::Conjugate(x),
        None => Conjugacy::SearchExhausted,
    })
}

/// How a classification was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictSource {
    /// π(G) ∩ π has at most one prime, or G is a π-group.
    Trivial,
    /// Exhaustive enumeration over the element table.
    Enumeration,
    /// A registered dedicated construction.
    Registered,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub pi: PiSet,
    pub order: u128,
    pub hall_order: u128,
    pub e: Option<bool>,
    pub c: Option<bool>,
    pub d: Option<bool>,
    /// Number of conjugacy classes of π-Hall subgroups.
    pub k: Option<usize>,
    pub class_sizes: Vec<usize>,
    pub pi_separable: Option<bool>,
    pub source: VerdictSource,
    /// Order of a π-subgroup lying in no Hall subgroup, when one was found.
    pub d_witness_order: Option<usize>,
}

/// E, C and D for `g`. Unknown values are `None`; budget errors from the
/// enumeration are propagated.
pub fn classify(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<Classification> {
    let order = g.order_u128();
    let m = pi_part(order, pi);
    let mut out = Classification {
        pi: pi.clone(),
        order,
        hall_order: m,
        e: None,
        c: None,
        d: None,
        k: None,
        class_sizes: Vec::new(),
        pi_separable: None,
        source: VerdictSource::Trivial,
        d_witness_order: None,
    };
    if m == 1 || m == order || pi.dividing(order).len() == 1 {
        // Sylow's theorem covers the single-prime case
        out.e = Some(true);
        out.c = Some(true);
        out.d = Some(true);
        out.k = Some(1);
        out.pi_separable = if m == 1 || m == order { Some(true) } else { None };
        return Ok(out);
    }
    if let Some(case) = ctx.special_case(g, pi) {
        out.source = VerdictSource::Registered;
        out.e = Some(case.cpi || case.hall.is_some()).filter(|&e| e);
        out.c = Some(case.cpi);
        out.d = if case.cpi { None } else { Some(false) };
        out.k = if case.cpi { Some(1) } else { None };
        return Ok(out);
    }
    out.source = VerdictSource::Enumeration;
    let e = enumerate_halls(g, pi, ctx, false)?;
    out.e = Some(e.exists());
    out.c = Some(e.class_count() == 1);
    out.k = Some(e.class_count());
    out.class_sizes = e.class_sizes.clone();
    out.pi_separable = pi_separable(g, pi, ctx).ok();
    out.d = if e.class_count() != 1 {
        Some(false)
    } else if out.pi_separable == Some(true) {
        Some(true)
    } else {
        match dominance_witness(&e, ctx)? {
            Some(w) => {
                out.d_witness_order = Some(w.count());
                Some(false)
            }
            None => Some(true),
        }
    };
    Ok(out)
}

/// Searches for a π-subgroup contained in no π-Hall subgroup. Assumes the
/// Hall subgroups form one conjugacy class. The search walks subgroups of
/// one Hall subgroup `H` (one representative per `H`-class) and their
/// extensions by single π-elements: a minimal bad subgroup is generated by
/// a conjugate of one of its maximal subgroups (which lies in `H`) and one
/// further element. When every group of order dividing `|H|` is solvable
/// (at most two primes, or odd order), the maximal subgroup can be taken
/// normal of prime index, so only elements normalizing the current
/// subgroup need to be tried.
pub fn dominance_witness(e: &HallEnumeration, ctx: &Ctx) -> Result<Option<Bits>> {
    let Some(h0) = e.all.first() else {
        return Ok(None);
    };
    let t = &e.table;
    let m = e.hall_order;
    let solvable = {
        let primes = crate::group::factorize(m as u64);
        primes.len() <= 2 || m % 2 == 1
    };
    let h0_maps = t.conjugation_maps(t.to_group(&t.from_bits(h0)).generators());
    let start = t.trivial();
    let mut seen: HashSet<Bits> = HashSet::new();
    seen.insert(start.bits.clone());
    let mut queue = vec![start];
    let mut head = 0;
    let mut closures: u64 = 0;
    while head < queue.len() {
        let u = queue[head].clone();
        head += 1;
        if u.order() == m {
            continue;
        }
        let gens: Vec<Perm> = u.gens.iter().map(|&g| t.perm(g)).collect();
        let mut covered = u.bits.clone();
        for &x in &e.pi_elements {
            if covered.contains(x) {
                continue;
            }
            if solvable {
                let xp = t.perm(x);
                let normalizes = gens
                    .iter()
                    .all(|g| t.rank_of(&g.conjugate(&xp)).is_some_and(|r| u.bits.contains(r)));
                if !normalizes {
                    continue;
                }
            }
            cover(t, &u, x, &mut covered);
            closures += 1;
            if closures > ctx.budget.nodes {
                return Err(Error::budget("π-subgroup dominance search"));
            }
            let Some(v) = t.extend(&u, &[x], m) else { continue };
            if !m.is_multiple_of(v.order()) {
                continue;
            }
            if v.bits.is_subset(h0) {
                if !seen.contains(&v.bits) {
                    seen.extend(t.subgroup_orbit(&v.bits, &h0_maps));
                    queue.push(v);
                }
            } else if !e.all.iter().any(|h| v.bits.is_subset(h)) {
                return Ok(Some(v.bits));
            }
        }
    }
    Ok(None)
}

/// Every chief factor is a π-group or a π'-group.
pub fn pi_separable(g: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<bool> {
    let series = structure::chief_series(g, ctx)?;
    Ok(series
        .factors
        .iter()
        .all(|f| is_pi_number(f.order, pi) || is_pi_prime_number(f.order, pi)))
}

#[derive(Clone, Debug)]
pub struct KReport {
    /// Number of `A`-classes of subgroups `H ∩ A`, `H` a π-Hall subgroup of `G`.
    pub k_induced: usize,
    /// Number of classes of π-Hall subgroups of `A`.
    pub k_total: usize,
    pub induced_reps: Vec<PermGroup>,
}

/// Counts the Hall classes of the normal subgroup `a` that arise by
/// intersecting with Hall subgroups of `g`.
pub fn k_induced(g: &PermGroup, a: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<KReport> {
    if !g.try_is_subgroup(a)? {
        return Err(Error::NotSubgroup("A is not contained in G".into()));
    }
    if !a.is_normal_in(g) {
        return Err(Error::NotNormal("A is not normal in G".into()));
    }
    let k_total = all_hall_classes(a, pi, ctx)?.class_reps.len();
    let e = enumerate_halls(g, pi, ctx, false)?;
    let t = &e.table;
    let abits = t.subgroup(a)?.bits;
    let mut ints: Vec<Bits> = Vec::new();
    let mut seen = HashSet::new();
    for h in &e.all {
        let i = h.intersect(&abits);
        if seen.insert(i.clone()) {
            ints.push(i);
        }
    }
    let amaps = t.conjugation_maps(a.generators());
    let (ids, sizes) = t.subgroup_classes(&ints, &amaps);
    let mut induced_reps = Vec::new();
    for c in 0..sizes.len() {
        if let Some(i) = ids.iter().position(|&k| k == c) {
            induced_reps.push(t.to_group(&t.from_bits(&ints[i])));
        }
    }
    Ok(KReport {
        k_induced: sizes.len(),
        k_total,
        induced_reps,
    })
}

/// Whether the `A`-class of `m` is stable under conjugation by `g`.
pub fn class_is_invariant(g: &PermGroup, a: &PermGroup, m: &PermGroup, ctx: &Ctx) -> Result<bool> {
    for x in g.generators() {
        let mx = m.conjugate(x);
        if !are_conjugate(a, m, &mx, ctx)?.is_conjugate() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A π-Hall subgroup `H` of `g` with `H ∩ A = M`, for a normal `A` and a
/// π-Hall subgroup `M` of `A` whose class is `g`-invariant. By the Frattini
/// argument such `H` can be sought in `N_G(M)`. Returns `None` when the
/// class is not invariant or `N_G(M)` has no Hall subgroup.
pub fn extend_hall(
    g: &PermGroup,
    a: &PermGroup,
    m: &PermGroup,
    pi: &PiSet,
    ctx: &Ctx,
) -> Result<Option<PermGroup>> {
    if !is_hall(a, m, pi)? {
        return Err(Error::Precondition("M is not a Hall subgroup of A".into()));
    }
    if !class_is_invariant(g, a, m, ctx)? {
        return Ok(None);
    }
    let n = search::normalizer(g, m, ctx.budget.nodes)?;
    let Some(h) = find_hall(&n, pi, ctx)? else {
        return Ok(None);
    };
    if !is_hall(g, &h, pi)? {
        return Err(Error::Verification("Hall subgroup of N_G(M) is not Hall in G".into()));
    }
    let i = search::intersection(&h, a, ctx.budget.nodes)?;
    if !i.same_group(m) {
        return Err(Error::Verification("H ∩ A differs from M".into()));
    }
    Ok(Some(h))
}

/// A π-Hall subgroup `H` of `g` whose image under `quotient` (a
/// homomorphism with kernel `A`) is the π-Hall subgroup `kbar` of the image.
/// The full preimage `K` of `kbar` has π′-index in `g`, so any π-Hall
/// subgroup of `K` is one of `g`.
pub fn lift_hall(g: &PermGroup, quotient: &Hom, kbar: &PermGroup, pi: &PiSet, ctx: &Ctx) -> Result<PermGroup> {
    let image = quotient.image_group(g)?;
    if !is_hall(&image, kbar, pi)? {
        return Err(Error::Precondition("the subgroup of the quotient is not π-Hall".into()));
    }
    let k = quotient.preimage(kbar)?;
    let h = find_hall(&k, pi, ctx)?
        .ok_or_else(|| Error::Precondition("the preimage has no π-Hall subgroup, so G is not E_π".into()))?;
    if !is_hall(g, &h, pi)? {
        return Err(Error::Verification("lifted subgroup is not π-Hall".into()));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn pi(s: &str) -> PiSet {
        PiSet::parse(s).unwrap()
    }

    #[test]
    fn pi_sets_parse_and_reject() {
        assert_eq!(pi(" 3, 2 ,3").to_string(), "2,3");
        assert!(matches!(PiSet::parse("2,4"), Err(Error::InvalidPi(_))));
        assert!(matches!(PiSet::parse(""), Err(Error::InvalidPi(_))));
        assert!(matches!(PiSet::parse("2,x"), Err(Error::InvalidPi(_))));
        let back: PiSet = serde_json::from_str("[5,2]").unwrap();
        assert_eq!(back, pi("2,5"));
        assert!(serde_json::from_str::<PiSet>("[1]").is_err());
    }

    #[test]
    fn pi_parts() {
        assert_eq!(pi_part(360, &pi("2,3")), 72);
        assert_eq!(pi_part(9_999_360, &pi("2,3")), 9216);
        assert_eq!(pi_part_big(&BigUint::from(9_999_360u64), &pi("2,3")), BigUint::from(9216u32));
        assert!(is_pi_number(12, &pi("2,3")));
        assert!(is_pi_prime_number(35, &pi("2,3")));
    }

    #[test]
    fn sylow_subgroups() {
        let ctx = Ctx::default();
        let g = zoo::sym(6);
        let p = sylow(&g, 2, &ctx).unwrap();
        assert_eq!(p.order_u128(), 16);
        assert!(g.is_subgroup(&p));
        let gl = zoo::gl(4, 2).unwrap();
        assert_eq!(sylow(&gl, 2, &ctx).unwrap().order_u128(), 64);
        assert_eq!(sylow(&gl, 7, &ctx).unwrap().order_u128(), 7);
    }

    #[test]
    fn hall_classes_of_small_groups() {
        let ctx = Ctx::default();
        // A5: {2,3}-Hall = A4, one class of 5
        let a5 = all_hall_classes(&zoo::alt(5), &pi("2,3"), &ctx).unwrap();
        assert_eq!(a5.class_sizes, vec![5]);
        // A5 has no subgroup of order 15
        assert!(all_hall_classes(&zoo::alt(5), &pi("3,5"), &ctx).unwrap().class_reps.is_empty());
        // S5 {2,3}: point stabilizers S4, one class
        let s5 = all_hall_classes(&zoo::sym(5), &pi("2,3"), &ctx).unwrap();
        assert_eq!(s5.class_sizes, vec![5]);
        // PSL(2,7) {2,3}: two classes of S4
        let l = all_hall_classes(&zoo::psl2(7).unwrap(), &pi("2,3"), &ctx).unwrap();
        assert_eq!(l.class_sizes, vec![7, 7]);
        assert_eq!(l.hall_order, 24);
    }

    #[test]
    fn classification() {
        let ctx = Ctx::default();
        let c = classify(&zoo::sym(5), &pi("2,3"), &ctx).unwrap();
        assert_eq!((c.e, c.c, c.d), (Some(true), Some(true), Some(false)));
        let c = classify(&zoo::psl2(7).unwrap(), &pi("2,3"), &ctx).unwrap();
        assert_eq!((c.e, c.c, c.d, c.k), (Some(true), Some(false), Some(false), Some(2)));
        let c = classify(&zoo::alt(5), &pi("3,5"), &ctx).unwrap();
        assert_eq!((c.e, c.c, c.d), (Some(false), Some(false), Some(false)));
        let c = classify(&zoo::sym(4), &pi("2,3"), &ctx).unwrap();
        assert_eq!((c.e, c.c, c.d), (Some(true), Some(true), Some(true)));
        let c = classify(&zoo::psl2(7).unwrap(), &pi("3,7"), &ctx).unwrap();
        assert_eq!((c.e, c.c, c.d), (Some(true), Some(true), Some(true)));
        let c = classify(&zoo::affine(7, 3).unwrap(), &pi("2,7"), &ctx).unwrap();
        assert_eq!(c.pi_separable, Some(true));
        assert_eq!(c.d, Some(true));
    }

    #[test]
    fn induced_classes() {
        let ctx = Ctx::default();
        // PGL(2,7)-free check: in S5 with A = A5, every Hall intersection is A4
        let r = k_induced(&zoo::sym(5), &zoo::alt(5), &pi("2,3"), &ctx).unwrap();
        assert_eq!((r.k_induced, r.k_total), (1, 1));
        let r = k_induced(&zoo::psl2(7).unwrap(), &zoo::psl2(7).unwrap(), &pi("2,3"), &ctx).unwrap();
        assert_eq!((r.k_induced, r.k_total), (2, 2));
    }

    #[test]
    fn extending_from_a_normal_subgroup() {
        let ctx = Ctx::default();
        let g = zoo::sym(5);
        let a = zoo::alt(5);
        let m = find_hall(&a, &pi("2,3"), &ctx).unwrap().unwrap();
        let h = extend_hall(&g, &a, &m, &pi("2,3"), &ctx).unwrap().unwrap();
        assert_eq!(h.order_u128(), 24);
    }

    #[test]
    fn lifting_through_a_quotient() {
        let ctx = Ctx::default();
        let g = zoo::sym(4);
        let v = g.subgroup(vec![
            Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        ]);
        let act = crate::hom::action_on_cosets(&g, &v, 100).unwrap();
        let kbar = sylow(&act.image, 3, &ctx).unwrap();
        let h = lift_hall(&g, &act.hom, &kbar, &pi("3"), &ctx).unwrap();
        assert_eq!(h.order_u128(), 3);
    }

    #[test]
    fn conjugacy() {
        let ctx = Ctx::default();
        let g = zoo::sym(4);
        let a = g.subgroup(vec![Perm::from_cycles(4, &[&[0, 1]]).unwrap()]);
        let b = g.subgroup(vec![Perm::from_cycles(4, &[&[2, 3]]).unwrap()]);
        let c = g.subgroup(vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]);
        let Conjugacy::Conjugate(x) = are_conjugate(&g, &a, &b, &ctx).unwrap() else {
            panic!("transpositions are conjugate")
        };
        assert!(a.conjugate(&x).same_group(&b));
        assert!(!are_conjugate(&g, &a, &c, &ctx).unwrap().is_conjugate());
    }
}
