//! Depth-first backtrack over a stabilizer chain.
//!
//! An element of `G` is written `x = x_k * u_{k-1} * ... * u_0` with `u_i` a
//! coset representative at level `i`. After fixing `u_0..u_{j-1}` the partial
//! product `t` already agrees with `x` on every point fixed by the level-`j`
//! stabilizer, so properties can be tested on those points early.
//!
//! Subgroup searches use the known part `K` of the answer to skip base
//! images already reached by `K` (Sims' pruning).

use std::collections::HashSet;

use crate::bsgs::Chain;
use crate::error::{Error, Result};
use crate::group::{orbit_of, orbits_of, PermGroup};
use crate::perm::Perm;

pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// A property of group elements closed under the search structure.
pub trait Property {
    /// `t` is correct on every point with `det[p]`; `new_pts` became
    /// determined at this node. Returning `false` prunes the subtree.
    fn partial_ok(&self, t: &Perm, det: &[bool], new_pts: &[u32]) -> bool;
    fn accept(&self, x: &Perm) -> bool;
}

struct Frame<'a> {
    chain: &'a Chain,
    det: Vec<Vec<bool>>,
    new_pts: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl<'a> Frame<'a> {
    fn new(chain: &'a Chain, budget: u64) -> Self {
        let k = chain.levels().len();
        let mut det = Vec::with_capacity(k + 1);
        let mut new_pts = Vec::with_capacity(k + 1);
        let mut prev = vec![false; chain.degree()];
        for i in 0..=k {
            let mut d = vec![false; chain.degree()];
            for p in chain.fixed_points_of_level(i) {
                d[p as usize] = true;
            }
            let fresh: Vec<u32> = (0..chain.degree() as u32)
                .filter(|&p| d[p as usize] && (i == 0 || !prev[p as usize]))
                .collect();
            prev = d.clone();
            det.push(d);
            new_pts.push(fresh);
        }
        Frame {
            chain,
            det,
            new_pts,
            nodes: 0,
            budget,
        }
    }

    fn dfs(&mut self, level: usize, t: &Perm, prop: &dyn Property) -> Result<Option<Perm>> {
        let k = self.chain.levels().len();
        if level == k {
            return Ok(prop.accept(t).then(|| t.clone()));
        }
        let orbit = self.chain.levels()[level].orbit().to_vec();
        for beta in orbit {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::budget(format!(
                    "backtrack node budget {} exhausted",
                    self.budget
                )));
            }
            let t2 = self.chain.rep(level, beta).compose(t);
            if !prop.partial_ok(&t2, &self.det[level + 1], &self.new_pts[level + 1]) {
                continue;
            }
            if let Some(x) = self.dfs(level + 1, &t2, prop)? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

/// The subgroup `{x in G : prop(x)}`, which must be a subgroup containing `known`.
pub fn subgroup_search(
    g: &PermGroup,
    prop: &dyn Property,
    known: &PermGroup,
    preference: Option<&[u32]>,
    budget: u64,
) -> Result<PermGroup> {
    let chain = g.chain_with_base(&[], preference);
    let base = chain.base();
    let k = base.len();
    let mut frame = Frame::new(&chain, budget);
    let mut result = known.clone();
    let all_det: Vec<Vec<u32>> = frame
        .det
        .iter()
        .map(|d| (0..d.len() as u32).filter(|&p| d[p as usize]).collect())
        .collect();
    for i in (0..k).rev() {
        let mut kchain = result.chain_with_base(&base, None);
        let mut failed: HashSet<u32> = HashSet::new();
        let orbit = chain.levels()[i].orbit().to_vec();
        for &gamma in orbit.iter().skip(1) {
            let korbit = orbit_of(g.degree(), &kchain.level_generators(i), base[i]);
            if korbit.binary_search(&gamma).is_ok() || failed.contains(&gamma) {
                continue;
            }
            let t = chain.rep(i, gamma);
            let found = if prop.partial_ok(&t, &frame.det[i + 1], &all_det[i + 1]) {
                frame.dfs(i + 1, &t, prop)?
            } else {
                None
            };
            match found {
                Some(x) => {
                    result = result.with_element(&x);
                    kchain = result.chain_with_base(&base, None);
                }
                None => {
                    let gens = kchain.level_generators(i);
                    failed.extend(orbit_of(g.degree(), &gens, gamma));
                }
            }
        }
    }
    Ok(result.reduced())
}

/// First element of `G` satisfying `prop`. When the solution set is known to
/// be closed under right multiplication by `right_stable`, only one image of
/// the first base point per orbit of that group is tried.
pub fn element_search(
    g: &PermGroup,
    prop: &dyn Property,
    right_stable: Option<&PermGroup>,
    preference: Option<&[u32]>,
    budget: u64,
) -> Result<Option<Perm>> {
    let chain = g.chain_with_base(&[], preference);
    let mut frame = Frame::new(&chain, budget);
    let id = Perm::identity(g.degree());
    let det0: Vec<u32> = (0..g.degree() as u32)
        .filter(|&p| frame.det[0][p as usize])
        .collect();
    if !prop.partial_ok(&id, &frame.det[0], &det0) {
        return Ok(None);
    }
    if chain.levels().is_empty() {
        return Ok(prop.accept(&id).then_some(id));
    }
    let orbit = chain.levels()[0].orbit().to_vec();
    let skip_rep: Option<Vec<u32>> = right_stable.map(|r| {
        let mut rep = vec![u32::MAX; g.degree()];
        for o in orbits_of(g.degree(), r.generators()) {
            for &x in &o {
                rep[x as usize] = o[0];
            }
        }
        rep
    });
    let mut tried: HashSet<u32> = HashSet::new();
    for beta in orbit {
        if let Some(rep) = &skip_rep {
            if !tried.insert(rep[beta as usize]) {
                continue;
            }
        }
        frame.nodes += 1;
        let t = chain.rep(0, beta);
        if !prop.partial_ok(&t, &frame.det[1], &frame.new_pts[1]) {
            continue;
        }
        if let Some(x) = frame.dfs(1, &t, prop)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Commutes with every element of a list.
pub struct Centralizes {
    gens: Vec<Perm>,
    invs: Vec<Perm>,
}

impl Centralizes {
    pub fn new(gens: &[Perm]) -> Self {
        Centralizes {
            gens: gens.to_vec(),
            invs: gens.iter().map(Perm::inverse).collect(),
        }
    }
}

impl Property for Centralizes {
    fn partial_ok(&self, t: &Perm, det: &[bool], new_pts: &[u32]) -> bool {
        for &p in new_pts {
            for (h, hi) in self.gens.iter().zip(&self.invs) {
                let q = h.apply(p);
                if det[q as usize] && t.apply(q) != h.apply(t.apply(p)) {
                    return false;
                }
                let r = hi.apply(p);
                if det[r as usize] && t.apply(p) != h.apply(t.apply(r)) {
                    return false;
                }
            }
        }
        true
    }

    fn accept(&self, x: &Perm) -> bool {
        self.gens.iter().all(|h| x.compose(h) == h.compose(x))
    }
}

/// Maps `src` onto `dst` by conjugation (`src^x = dst`), pruned by requiring
/// that orbits of `src` go to orbits of `dst` of the same length.
pub struct ConjugatesTo {
    src_gens: Vec<Perm>,
    dst: PermGroup,
    src_orbit: Vec<usize>,
    src_len: Vec<usize>,
    dst_orbit: Vec<usize>,
    dst_len: Vec<usize>,
}

impl ConjugatesTo {
    pub fn new(src: &PermGroup, dst: &PermGroup) -> Self {
        let (src_orbit, src_len) = orbit_labels(src);
        let (dst_orbit, dst_len) = orbit_labels(dst);
        ConjugatesTo {
            src_gens: src.generators().to_vec(),
            dst: dst.clone(),
            src_orbit,
            src_len,
            dst_orbit,
            dst_len,
        }
    }
}

fn orbit_labels(g: &PermGroup) -> (Vec<usize>, Vec<usize>) {
    let mut label = vec![0usize; g.degree()];
    let mut lens = Vec::new();
    for (i, o) in g.orbits().into_iter().enumerate() {
        for &x in &o {
            label[x as usize] = i;
        }
        lens.push(o.len());
    }
    (label, lens)
}

impl Property for ConjugatesTo {
    fn partial_ok(&self, t: &Perm, det: &[bool], new_pts: &[u32]) -> bool {
        for &p in new_pts {
            let so = self.src_orbit[p as usize];
            let dorb = self.dst_orbit[t.apply(p) as usize];
            if self.src_len[so] != self.dst_len[dorb] {
                return false;
            }
        }
        if new_pts.is_empty() {
            return true;
        }
        // orbit images must be consistent across all determined points
        let mut img = vec![usize::MAX; self.src_len.len()];
        for (p, &d) in det.iter().enumerate() {
            if !d {
                continue;
            }
            let so = self.src_orbit[p];
            let dorb = self.dst_orbit[t.apply(p as u32) as usize];
            if img[so] == usize::MAX {
                img[so] = dorb;
            } else if img[so] != dorb {
                return false;
            }
        }
        true
    }

    fn accept(&self, x: &Perm) -> bool {
        self.src_gens
            .iter()
            .all(|h| self.dst.contains(&h.conjugate(x)))
    }
}

/// Preserves a labelling of the points (`label[x(p)] == label[p]`).
pub struct PreservesLabels {
    label: Vec<u32>,
}

impl PreservesLabels {
    pub fn new(label: Vec<u32>) -> Self {
        PreservesLabels { label }
    }
}

impl Property for PreservesLabels {
    fn partial_ok(&self, t: &Perm, _det: &[bool], new_pts: &[u32]) -> bool {
        new_pts
            .iter()
            .all(|&p| self.label[t.apply(p) as usize] == self.label[p as usize])
    }

    fn accept(&self, x: &Perm) -> bool {
        (0..x.degree() as u32).all(|p| self.label[x.apply(p) as usize] == self.label[p as usize])
    }
}

/// Membership in a second group.
pub struct InGroup<'a>(pub &'a PermGroup);

impl Property for InGroup<'_> {
    fn partial_ok(&self, _t: &Perm, _det: &[bool], _new: &[u32]) -> bool {
        true
    }

    fn accept(&self, x: &Perm) -> bool {
        self.0.contains(x)
    }
}

pub struct All<'a>(pub Vec<&'a dyn Property>);

impl Property for All<'_> {
    fn partial_ok(&self, t: &Perm, det: &[bool], new_pts: &[u32]) -> bool {
        self.0.iter().all(|p| p.partial_ok(t, det, new_pts))
    }

    fn accept(&self, x: &Perm) -> bool {
        self.0.iter().all(|p| p.accept(x))
    }
}

/// Points listed orbit by orbit of `h` (shortest orbits first), each orbit in
/// breadth-first order from its smallest point.
pub fn orbit_preference(h: &PermGroup) -> Vec<u32> {
    let mut orbits = h.orbits();
    orbits.sort_by_key(|o| (o.len(), o[0]));
    let mut out = Vec::with_capacity(h.degree());
    let mut seen = vec![false; h.degree()];
    for o in orbits {
        let start = o[0];
        let mut queue = vec![start];
        seen[start as usize] = true;
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for g in h.generators() {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        out.extend(queue);
    }
    out
}

pub fn centralizer(g: &PermGroup, h: &PermGroup, budget: u64) -> Result<PermGroup> {
    centralizer_of_elements(g, h.generators(), budget)
}

pub fn centralizer_of_elements(g: &PermGroup, elems: &[Perm], budget: u64) -> Result<PermGroup> {
    let h = PermGroup::from_gens_unchecked(g.degree(), elems.to_vec());
    let prop = Centralizes::new(elems);
    // elements of h lying in g centralize nothing but themselves in general;
    // the center of h intersected with g is a safe starting point
    let known_gens: Vec<Perm> = elems
        .iter()
        .filter(|x| g.contains(x) && prop.accept(x))
        .cloned()
        .collect();
    let known = PermGroup::from_gens_unchecked(g.degree(), known_gens);
    let pref = orbit_preference(&h);
    subgroup_search(g, &prop, &known, Some(&pref), budget)
}

pub fn normalizer(g: &PermGroup, h: &PermGroup, budget: u64) -> Result<PermGroup> {
    if h.is_normal_in(g) {
        return Ok(g.clone());
    }
    let prop = ConjugatesTo::new(h, h);
    let pref = orbit_preference(h);
    subgroup_search(g, &prop, h, Some(&pref), budget)
}

/// `x in G` with `h^x = k`, if any.
pub fn conjugating_element(
    g: &PermGroup,
    h: &PermGroup,
    k: &PermGroup,
    budget: u64,
) -> Result<Option<Perm>> {
    if h.order_u128() != k.order_u128() {
        return Ok(None);
    }
    let prop = ConjugatesTo::new(h, k);
    let pref = orbit_preference(h);
    element_search(g, &prop, Some(k), Some(&pref), budget)
}

/// Stabilizer of a labelling (e.g. a set, an ordered partition).
pub fn label_stabilizer(g: &PermGroup, label: &[u32], budget: u64) -> Result<PermGroup> {
    let mut pref: Vec<u32> = (0..g.degree() as u32).collect();
    let mut counts = std::collections::HashMap::new();
    for &l in label {
        *counts.entry(l).or_insert(0usize) += 1;
    }
    pref.sort_by_key(|&p| (counts[&label[p as usize]], label[p as usize], p));
    let prop = PreservesLabels::new(label.to_vec());
    let known = PermGroup::trivial(g.degree());
    subgroup_search(g, &prop, &known, Some(&pref), budget)
}

pub fn set_stabilizer(g: &PermGroup, set: &[u32], budget: u64) -> Result<PermGroup> {
    let mut label = vec![0u32; g.degree()];
    for &x in set {
        label[x as usize] = 1;
    }
    label_stabilizer(g, &label, budget)
}

/// `G ∩ H`, searched inside the smaller of the two.
pub fn intersection(g: &PermGroup, h: &PermGroup, budget: u64) -> Result<PermGroup> {
    let (small, big) = if g.order_u128() <= h.order_u128() {
        (g, h)
    } else {
        (h, g)
    };
    if big.is_subgroup(small) {
        return Ok(small.clone());
    }
    let known_gens: Vec<Perm> = small
        .generators()
        .iter()
        .filter(|x| big.contains(x))
        .cloned()
        .collect();
    let known = PermGroup::from_gens_unchecked(g.degree(), known_gens);
    subgroup_search(small, &InGroup(big), &known, None, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn brute<F: Fn(&Perm) -> bool>(g: &PermGroup, f: F) -> u128 {
        g.elements().iter().filter(|x| f(x)).count() as u128
    }

    #[test]
    fn normalizer_of_three_cycle_in_s4() {
        let g = zoo::sym(4);
        let c = Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let h = g.subgroup(vec![c]);
        let n = normalizer(&g, &h, DEFAULT_NODE_BUDGET).unwrap();
        let expect = brute(&g, |x| h.is_normalized_by(x));
        assert_eq!(expect, 6);
        assert_eq!(n.order_u128(), expect);
    }

    #[test]
    fn centralizer_matches_brute_force() {
        let s3 = zoo::sym(3);
        let a3 = zoo::alt(3);
        let c = centralizer(&s3, &a3, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(c.order_u128(), 3);
        assert!(c.same_group(&a3));
        let g = zoo::sym(6);
        let x = Perm::from_cycles(6, &[&[0, 1], &[2, 3, 4]]).unwrap();
        let c = centralizer_of_elements(&g, std::slice::from_ref(&x), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(c.order_u128(), brute(&g, |y| y.compose(&x) == x.compose(y)));
    }

    #[test]
    fn centralizer_of_trivial_is_whole_group() {
        let g = zoo::alt(5);
        let c = centralizer(&g, &PermGroup::trivial(5), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(c.order_u128(), 60);
    }

    #[test]
    fn set_stabilizer_in_s6() {
        let g = zoo::sym(6);
        let s = set_stabilizer(&g, &[0, 3], DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(s.order_u128(), 2 * 24);
    }

    #[test]
    fn conjugacy_of_sylow_two_subgroups_in_s4() {
        let g = zoo::sym(4);
        let d1 = g.subgroup(vec![
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 2]]).unwrap(),
        ]);
        let d2 = g.subgroup(vec![
            Perm::from_cycles(4, &[&[0, 2, 1, 3]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
        ]);
        let x = conjugating_element(&g, &d1, &d2, DEFAULT_NODE_BUDGET)
            .unwrap()
            .unwrap();
        assert!(d1.conjugate(&x).same_group(&d2));
    }

    #[test]
    fn intersection_of_alternating_and_dihedral() {
        let a4 = zoo::alt(4);
        let d4 = zoo::dihedral(4);
        let i = intersection(&a4, &d4, DEFAULT_NODE_BUDGET).unwrap();
        let expect = a4.elements().iter().filter(|x| d4.contains(x)).count() as u128;
        assert_eq!(i.order_u128(), expect);
    }

    #[test]
    fn normalizers_agree_with_brute_force_in_s5() {
        let g = zoo::sym(5);
        let subgroups = vec![
            g.subgroup(vec![Perm::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()]),
            g.subgroup(vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap()]),
            g.subgroup(vec![
                Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[&[0, 1, 3]]).unwrap(),
            ]),
        ];
        for h in subgroups {
            let n = normalizer(&g, &h, DEFAULT_NODE_BUDGET).unwrap();
            assert_eq!(n.order_u128(), brute(&g, |x| h.is_normalized_by(x)));
        }
    }

    #[test]
    fn random_subgroups_of_s6_against_brute_force() {
        let g = zoo::sym(6);
        let all = g.elements();
        for seed in 0..25u64 {
            let a = g.random_element_seeded(seed);
            let mut gens = vec![a];
            if seed % 3 == 0 {
                gens.push(g.random_element_seeded(seed + 1000));
            }
            let h = g.subgroup(gens.clone());
            let n = normalizer(&g, &h, DEFAULT_NODE_BUDGET).unwrap();
            let c = centralizer(&g, &h, DEFAULT_NODE_BUDGET).unwrap();
            let nb = all.iter().filter(|x| h.is_normalized_by(x)).count() as u128;
            let cb = all
                .iter()
                .filter(|x| gens.iter().all(|y| y.compose(x) == x.compose(y)))
                .count() as u128;
            assert_eq!(n.order_u128(), nb, "normalizer seed {seed}");
            assert_eq!(c.order_u128(), cb, "centralizer seed {seed}");
            let k = h.conjugate(&g.random_element_seeded(seed + 7));
            let x = conjugating_element(&g, &h, &k, DEFAULT_NODE_BUDGET)
                .unwrap()
                .expect("conjugate subgroups");
            assert!(h.conjugate(&x).same_group(&k));
        }
    }
}
