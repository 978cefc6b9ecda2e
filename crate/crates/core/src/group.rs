//! Permutation groups with a lazily built stabilizer chain.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::Rng;

use crate::bsgs::Chain;
use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: Arc<OnceLock<Arc<Chain>>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order_u128())
            .field("gens", &self.gens)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(Self::from_gens_unchecked(degree, gens))
    }

    pub(crate) fn from_gens_unchecked(degree: usize, gens: Vec<Perm>) -> Self {
        let mut seen = HashSet::new();
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_identity() && seen.insert(g.clone()))
            .collect();
        PermGroup {
            degree,
            gens,
            chain: Arc::new(OnceLock::new()),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_gens_unchecked(degree, Vec::new())
    }

    /// Subgroup generated by `gens`, sharing nothing with `self` but the degree.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Self {
        Self::from_gens_unchecked(self.degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    /// Stabilizer chain with greedy base (smallest moved point first).
    pub fn chain(&self) -> &Chain {
        self.chain
            .get_or_init(|| Arc::new(Chain::build(self.degree, &self.gens, &[], None)))
    }

    /// Forces construction of the stabilizer chain. `seed` is accepted for
    /// interface stability; construction is deterministic.
    pub fn build_bsgs(&self, _seed: u64) -> &Chain {
        self.chain()
    }

    /// A fresh chain whose base starts with `prefix` and is then extended in
    /// `preference` order.
    pub fn chain_with_base(&self, prefix: &[u32], preference: Option<&[u32]>) -> Chain {
        let gens: Vec<Perm> = if self.chain.get().is_some() {
            self.chain().strong_generators().to_vec()
        } else {
            self.gens.clone()
        };
        Chain::build(self.degree, &gens, prefix, preference)
    }

    pub fn order_u128(&self) -> u128 {
        self.chain().order_u128()
    }

    pub fn order(&self) -> BigUint {
        self.chain()
            .orbit_lengths()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l))
    }

    /// Order as `u64`; every group handled here fits.
    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order_u128()).expect("group order exceeds u64")
    }

    /// Prime factorization of the order, read off the basic orbit lengths.
    pub fn order_factors(&self) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        for l in self.chain().orbit_lengths() {
            for (p, e) in factorize(l as u64) {
                *out.entry(p).or_insert(0) += e;
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    pub fn try_contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.contains(p))
    }

    /// Whether `h` is a subgroup of `self`.
    pub fn is_subgroup(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.gens.iter().all(|g| self.contains(g))
    }

    pub fn try_is_subgroup(&self, h: &PermGroup) -> Result<bool> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch(self.degree, h.degree));
        }
        Ok(self.is_subgroup(h))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order_u128() == other.order_u128()
            && self.is_subgroup(other)
    }

    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        self.gens.iter().all(|h| self.contains(&h.conjugate(g)))
    }

    /// Whether `self` is normal in `g` (`self` is assumed to be a subgroup).
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.gens.iter().all(|x| self.is_normalized_by(x))
    }

    pub fn is_abelian(&self) -> bool {
        let gs = &self.gens;
        (0..gs.len()).all(|i| (i + 1..gs.len()).all(|j| gs[i].compose(&gs[j]) == gs[j].compose(&gs[i])))
    }

    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        if point as usize >= self.degree {
            return Err(Error::PointOutOfRange {
                point: point as usize,
                degree: self.degree,
            });
        }
        Ok(orbit_of(self.degree, &self.gens, point))
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn stabilizer(&self, point: u32) -> Result<PermGroup> {
        if point as usize >= self.degree {
            return Err(Error::PointOutOfRange {
                point: point as usize,
                degree: self.degree,
            });
        }
        let chain = self.chain_with_base(&[point], None);
        Ok(PermGroup::from_gens_unchecked(
            self.degree,
            chain.level_generators(1),
        ))
    }

    pub fn pointwise_stabilizer(&self, points: &[u32]) -> PermGroup {
        let chain = self.chain_with_base(points, None);
        PermGroup::from_gens_unchecked(self.degree, chain.level_generators(points.len()))
    }

    /// Uniform random element: product of uniformly chosen coset representatives.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let chain = self.chain();
        let choices: Vec<usize> = chain
            .levels()
            .iter()
            .map(|l| rng.gen_range(0..l.orbit_len()))
            .collect();
        chain.element_from_choices(&choices)
    }

    pub fn random_element_seeded(&self, seed: u64) -> Perm {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        self.random_element(&mut rng)
    }

    /// All elements in rank order. Only sensible for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let chain = self.chain();
        let n = self.order_u64();
        (0..n).map(|r| chain.unrank(r)).collect()
    }

    pub fn conjugate(&self, g: &Perm) -> PermGroup {
        PermGroup::from_gens_unchecked(
            self.degree,
            self.gens.iter().map(|h| h.conjugate(g)).collect(),
        )
    }

    /// `<self, other>`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        PermGroup::from_gens_unchecked(self.degree, gens)
    }

    pub fn with_element(&self, x: &Perm) -> PermGroup {
        let mut gens = self.gens.clone();
        gens.push(x.clone());
        PermGroup::from_gens_unchecked(self.degree, gens)
    }

    /// Replaces the generators by a short generating set of the same group.
    pub fn reduced(&self) -> PermGroup {
        let mut out: Vec<Perm> = Vec::new();
        let target = self.order_u128();
        let mut cur = PermGroup::trivial(self.degree);
        for g in self.chain().strong_generators() {
            if cur.order_u128() == target {
                break;
            }
            if !cur.contains(g) {
                out.push(g.clone());
                cur = PermGroup::from_gens_unchecked(self.degree, out.clone());
            }
        }
        cur
    }

    /// Element-order histogram over `samples` random elements drawn with `seed`.
    pub fn element_order_histogram(&self, samples: usize, seed: u64) -> BTreeMap<u64, usize> {
        use rand::SeedableRng;
        let mut out = BTreeMap::new();
        let n = self.order_u128();
        if n <= samples as u128 {
            for e in self.elements() {
                *out.entry(e.order()).or_insert(0) += 1;
            }
            return out;
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            *out.entry(self.random_element(&mut rng).order()).or_insert(0) += 1;
        }
        out
    }
}

pub(crate) fn orbit_of(degree: usize, gens: &[Perm], point: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[point as usize] = true;
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                orbit.push(y);
            }
        }
        head += 1;
    }
    orbit.sort_unstable();
    orbit
}

pub(crate) fn orbits_of(degree: usize, gens: &[Perm]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for x in 0..degree as u32 {
        if !seen[x as usize] {
            let o = orbit_of(degree, gens, x);
            for &y in &o {
                seen[y as usize] = true;
            }
            out.push(o);
        }
    }
    out
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= n / p {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    primal_check::miller_rabin(n)
}
