//! Explicit element tables for small groups.
//!
//! Elements are numbered by their rank in the stabilizer chain; subgroups
//! are bitsets over those numbers. This is the substrate of the exhaustive
//! Hall-subgroup search and of conjugacy-class bookkeeping.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Default largest group order the table will enumerate.
pub const DEFAULT_ORDER_BUDGET: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(len: usize) -> Bits {
        Bits(vec![0; len.div_ceil(64)])
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let w = &mut self.0[(i / 64) as usize];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(k as u32 * 64 + t)
            })
        })
    }
}

/// A subgroup given by its elements.
#[derive(Clone, Debug)]
pub struct SubTable {
    pub bits: Bits,
    pub elems: Vec<u32>,
    pub gens: Vec<u32>,
}

impl SubTable {
    pub fn order(&self) -> usize {
        self.elems.len()
    }
}

#[derive(Clone, Debug)]
pub struct ElementTable {
    group: PermGroup,
    degree: usize,
    data: Vec<u32>,
    orders: Vec<u64>,
}

impl ElementTable {
    pub fn new(group: &PermGroup, budget: u128) -> Result<ElementTable> {
        let n = group.order_u128();
        if n > budget {
            return Err(Error::budget(format!(
                "group of order {n} exceeds the element-table budget {budget}"
            )));
        }
        let chain = group.chain();
        let degree = group.degree();
        let mut data = Vec::with_capacity(n as usize * degree);
        let mut orders = Vec::with_capacity(n as usize);
        for r in 0..n as u64 {
            let p = chain.unrank(r);
            orders.push(p.order());
            data.extend_from_slice(p.images());
        }
        Ok(ElementTable {
            group: group.clone(),
            degree,
            data,
            orders,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn images(&self, r: u32) -> &[u32] {
        let s = r as usize * self.degree;
        &self.data[s..s + self.degree]
    }

    pub fn perm(&self, r: u32) -> Perm {
        Perm::from_vec_unchecked(self.images(r).to_vec())
    }

    pub fn element_order(&self, r: u32) -> u64 {
        self.orders[r as usize]
    }

    pub fn rank_of(&self, p: &Perm) -> Option<u32> {
        self.group.chain().rank(p).map(|r| r as u32)
    }

    fn rank_images(&self, img: Vec<u32>) -> u32 {
        self.group
            .chain()
            .rank(&Perm::from_vec_unchecked(img))
            .expect("product of elements lies in the group") as u32
    }

    /// Rank of `a * b` (apply `a` first).
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.images(a), self.images(b));
        self.rank_images(x.iter().map(|&i| y[i as usize]).collect())
    }

    pub fn identity(&self) -> u32 {
        self.rank_of(&Perm::identity(self.degree)).expect("identity")
    }

    /// For each element `g` of `by`, the map `r -> rank(elem(r)^g)`.
    pub fn conjugation_maps(&self, by: &[Perm]) -> Vec<Vec<u32>> {
        by.iter()
            .map(|g| {
                (0..self.len() as u32)
                    .map(|r| self.rank_images(conj_images(self.images(r), g)))
                    .collect()
            })
            .collect()
    }

    pub fn subgroup(&self, h: &PermGroup) -> Result<SubTable> {
        let mut gens = Vec::new();
        for g in h.generators() {
            gens.push(
                self.rank_of(g)
                    .ok_or_else(|| Error::NotSubgroup("generator outside the group".into()))?,
            );
        }
        let trivial = self.trivial();
        Ok(self
            .extend(&trivial, &gens, usize::MAX)
            .expect("no size limit"))
    }

    pub fn trivial(&self) -> SubTable {
        let id = self.identity();
        let mut bits = Bits::new(self.len());
        bits.insert(id);
        SubTable {
            bits,
            elems: vec![id],
            gens: Vec::new(),
        }
    }

    /// `<U, extra>`, or `None` when it would exceed `limit` elements.
    pub fn extend(&self, u: &SubTable, extra: &[u32], limit: usize) -> Option<SubTable> {
        let mut gens = u.gens.clone();
        for &x in extra {
            if !u.bits.contains(x) && !gens.contains(&x) {
                gens.push(x);
            }
        }
        let mut bits = u.bits.clone();
        let mut elems = u.elems.clone();
        let mut reps: Vec<u32> = vec![self.identity()];
        let mut head = 0;
        // the set is a union of right cosets U r; it is closed under right
        // multiplication once every r * s lands in it
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for &s in &gens {
                let t = self.mul(r, s);
                if bits.contains(t) {
                    continue;
                }
                if elems.len() + u.elems.len() > limit {
                    return None;
                }
                for &e in &u.elems {
                    let v = self.mul(e, t);
                    bits.insert(v);
                    elems.push(v);
                }
                reps.push(t);
            }
        }
        Some(SubTable { bits, elems, gens })
    }

    /// The subgroup whose elements are exactly `bits`, with generators
    /// chosen greedily in rank order. Panics in debug builds if `bits` is
    /// not closed.
    pub fn from_bits(&self, bits: &Bits) -> SubTable {
        let mut cur = self.trivial();
        for r in bits.iter() {
            if !cur.bits.contains(r) {
                cur = self.extend(&cur, &[r], usize::MAX).expect("no size limit");
            }
        }
        debug_assert_eq!(&cur.bits, bits);
        cur
    }

    pub fn to_group(&self, s: &SubTable) -> PermGroup {
        PermGroup::from_gens_unchecked(
            self.degree,
            s.gens.iter().map(|&g| self.perm(g)).collect(),
        )
    }

    /// Image of a subgroup bitset under a conjugation map.
    pub fn conjugate_bits(&self, bits: &Bits, map: &[u32]) -> Bits {
        let mut out = Bits::new(self.len());
        for r in bits.iter() {
            out.insert(map[r as usize]);
        }
        out
    }

    /// Orbits of elements under conjugation maps; returns an orbit id per element.
    pub fn classes(&self, maps: &[Vec<u32>], within: Option<&Bits>) -> Vec<u32> {
        let mut id = vec![u32::MAX; self.len()];
        let mut next = 0;
        for start in 0..self.len() as u32 {
            if id[start as usize] != u32::MAX || within.is_some_and(|w| !w.contains(start)) {
                continue;
            }
            id[start as usize] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for m in maps {
                    let y = m[x as usize];
                    if id[y as usize] == u32::MAX {
                        id[y as usize] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        id
    }

    /// The orbit of a subgroup under conjugation maps.
    pub fn subgroup_orbit(&self, bits: &Bits, maps: &[Vec<u32>]) -> Vec<Bits> {
        let mut seen: HashSet<Bits> = HashSet::new();
        seen.insert(bits.clone());
        let mut out = vec![bits.clone()];
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            head += 1;
            for m in maps {
                let next = self.conjugate_bits(&cur, m);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
        }
        out
    }

    /// Partition of a list of subgroups into orbits under conjugation maps.
    /// Returns orbit id per input and the orbit sizes (full orbit sizes,
    /// including members absent from the list).
    pub fn subgroup_classes(&self, subs: &[Bits], maps: &[Vec<u32>]) -> (Vec<usize>, Vec<usize>) {
        let mut where_: HashMap<&Bits, usize> = HashMap::new();
        for (i, s) in subs.iter().enumerate() {
            where_.insert(s, i);
        }
        let mut id = vec![usize::MAX; subs.len()];
        let mut sizes = Vec::new();
        for i in 0..subs.len() {
            if id[i] != usize::MAX {
                continue;
            }
            let orbit = self.subgroup_orbit(&subs[i], maps);
            for o in &orbit {
                if let Some(&j) = where_.get(o) {
                    id[j] = sizes.len();
                }
            }
            sizes.push(orbit.len());
        }
        (id, sizes)
    }
}

fn conj_images(x: &[u32], g: &Perm) -> Vec<u32> {
    let mut img = vec![0u32; x.len()];
    for (i, &y) in x.iter().enumerate() {
        img[g.apply(i as u32) as usize] = g.apply(y);
    }
    img
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn bits_basics() {
        let mut b = Bits::new(130);
        assert!(b.insert(3));
        assert!(!b.insert(3));
        b.insert(129);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(b.count(), 2);
    }

    #[test]
    fn closure_and_classes_of_s4() {
        let g = zoo::sym(4);
        let t = ElementTable::new(&g, DEFAULT_ORDER_BUDGET).unwrap();
        assert_eq!(t.len(), 24);
        let a4 = t.subgroup(&zoo::alt(4)).unwrap();
        assert_eq!(a4.order(), 12);
        let c = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let rc = t.rank_of(&c).unwrap();
        assert_eq!(t.extend(&a4, &[rc], 100).unwrap().order(), 24);
        assert!(t.extend(&a4, &[rc], 20).is_none());
        let maps = t.conjugation_maps(g.generators());
        let cls = t.classes(&maps, None);
        let distinct: HashSet<u32> = cls.iter().copied().collect();
        assert_eq!(distinct.len(), 5);
    }

    #[test]
    fn subgroup_orbits() {
        let g = zoo::sym(4);
        let t = ElementTable::new(&g, DEFAULT_ORDER_BUDGET).unwrap();
        let maps = t.conjugation_maps(g.generators());
        let h = t
            .subgroup(&g.subgroup(vec![Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap()]))
            .unwrap();
        assert_eq!(t.subgroup_orbit(&h.bits, &maps).len(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(ElementTable::new(&zoo::sym(8), 1000).unwrap_err().is_budget());
    }
}
