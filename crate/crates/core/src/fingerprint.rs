//! Conjugation invariants of subgroups, used to reject non-conjugate pairs
//! without a search.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;

/// Subgroups up to this order get an exact element-order histogram.
pub const HISTOGRAM_LIMIT: u128 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u128,
    /// For each orbit of the ambient group (ordered by smallest point), the
    /// sorted lengths of the subgroup's orbits inside it.
    pub orbit_signature: Vec<Vec<usize>>,
    /// Exact element-order counts; absent for large subgroups.
    pub order_histogram: Option<BTreeMap<u64, usize>>,
}

impl Fingerprint {
    /// Invariant under conjugation by elements of `ambient`.
    pub fn of(ambient: &PermGroup, h: &PermGroup) -> Fingerprint {
        let mut where_orbit = vec![0usize; h.degree()];
        let amb = ambient.orbits();
        for (i, o) in amb.iter().enumerate() {
            for &x in o {
                where_orbit[x as usize] = i;
            }
        }
        let mut sig = vec![Vec::new(); amb.len()];
        for o in h.orbits() {
            sig[where_orbit[o[0] as usize]].push(o.len());
        }
        for s in sig.iter_mut() {
            s.sort_unstable();
        }
        let order = h.order_u128();
        let order_histogram = (order <= HISTOGRAM_LIMIT).then(|| {
            let mut hist = BTreeMap::new();
            for x in h.elements() {
                *hist.entry(x.order()).or_insert(0) += 1;
            }
            hist
        });
        Fingerprint {
            order,
            orbit_signature: sig,
            order_histogram,
        }
    }

    /// Plain orbit-length multiset, ignoring the ambient orbits.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbit_signature.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// A short printable digest.
    pub fn digest(&self) -> String {
        let mut s = format!("o{}", self.order);
        for part in &self.orbit_signature {
            s.push('|');
            let lens: Vec<String> = part.iter().map(|l| l.to_string()).collect();
            s.push_str(&lens.join("."));
        }
        if let Some(h) = &self.order_histogram {
            s.push('#');
            let cells: Vec<String> = h.iter().map(|(o, c)| format!("{o}:{c}")).collect();
            s.push_str(&cells.join(","));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::zoo;

    #[test]
    fn conjugates_share_fingerprints() {
        let g = zoo::sym(6);
        let h = g.subgroup(vec![Perm::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap()]);
        for seed in 0..10 {
            let x = g.random_element_seeded(seed);
            assert_eq!(Fingerprint::of(&g, &h), Fingerprint::of(&g, &h.conjugate(&x)));
        }
    }

    #[test]
    fn different_cycle_shapes_differ() {
        let g = zoo::sym(4);
        let a = g.subgroup(vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]);
        let b = g.subgroup(vec![Perm::from_cycles(4, &[&[0, 1]]).unwrap()]);
        assert_ne!(Fingerprint::of(&g, &a), Fingerprint::of(&g, &b));
    }
}
