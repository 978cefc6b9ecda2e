//! Base and strong generating set (stabilizer chain) built by deterministic
//! Schreier-Sims.

use crate::perm::Perm;

/// Orbits longer than this (times the degree) keep only a Schreier tree
/// instead of explicit coset representatives.
const EXPLICIT_REP_WORDS: usize = 1 << 22;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Level {
    base: u32,
    gens: Vec<usize>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    /// For orbit index `i > 0`: (orbit index of parent, strong generator index).
    parent: Vec<(u32, u32)>,
    reps: Option<Vec<Perm>>,
    inv_reps: Option<Vec<Perm>>,
}

impl Level {
    pub fn base_point(&self) -> u32 {
        self.base
    }

    /// Orbit of the base point under this level's group, in discovery order.
    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn in_orbit(&self, x: u32) -> bool {
        self.pos[x as usize] != NONE
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }
}

#[derive(Clone, Debug)]
pub struct Chain {
    degree: usize,
    strong: Vec<Perm>,
    strong_inv: Vec<Perm>,
    levels: Vec<Level>,
}

impl Chain {
    /// Runs Schreier-Sims. The base starts with `prefix`; further base points are
    /// the first point moved by the residue, scanning points in `preference`
    /// order (natural order when `None`).
    pub fn build(degree: usize, gens: &[Perm], prefix: &[u32], preference: Option<&[u32]>) -> Chain {
        let mut strong: Vec<Perm> = Vec::new();
        for g in gens {
            debug_assert_eq!(g.degree(), degree);
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let natural: Vec<u32>;
        let pref = match preference {
            Some(p) => p,
            None => {
                natural = (0..degree as u32).collect();
                &natural
            }
        };
        let mut base: Vec<u32> = Vec::new();
        for &b in prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for s in &strong {
            if base.iter().all(|&b| s.apply(b) == b) {
                base.push(first_moved(s, pref));
            }
        }
        let strong_inv = strong.iter().map(Perm::inverse).collect();
        let mut chain = Chain {
            degree,
            strong,
            strong_inv,
            levels: Vec::new(),
        };
        chain.levels = base
            .iter()
            .map(|&b| Level {
                base: b,
                gens: Vec::new(),
                orbit: Vec::new(),
                pos: Vec::new(),
                parent: Vec::new(),
                reps: None,
                inv_reps: None,
            })
            .collect();
        for i in 0..chain.levels.len() {
            chain.recompute_level(i);
        }
        chain.schreier_sims(pref);
        chain
    }

    fn recompute_level(&mut self, i: usize) {
        let n = self.degree;
        let base: Vec<u32> = self.levels.iter().map(|l| l.base).collect();
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| base[..i].iter().all(|&b| self.strong[s].apply(b) == b))
            .collect();
        let b = base[i];
        let mut pos = vec![NONE; n];
        let mut orbit = vec![b];
        let mut parent = vec![(NONE, NONE)];
        pos[b as usize] = 0;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for &s in &gens {
                let y = self.strong[s].apply(x);
                if pos[y as usize] == NONE {
                    pos[y as usize] = orbit.len() as u32;
                    orbit.push(y);
                    parent.push((head as u32, s as u32));
                }
            }
            head += 1;
        }
        let explicit = orbit.len().saturating_mul(n) <= EXPLICIT_REP_WORDS;
        let (reps, inv_reps) = if explicit {
            let mut reps: Vec<Perm> = Vec::with_capacity(orbit.len());
            reps.push(Perm::identity(n));
            for k in 1..orbit.len() {
                let (p, s) = parent[k];
                let r = reps[p as usize].compose(&self.strong[s as usize]);
                reps.push(r);
            }
            let inv = reps.iter().map(Perm::inverse).collect();
            (Some(reps), Some(inv))
        } else {
            (None, None)
        };
        self.levels[i] = Level {
            base: b,
            gens,
            orbit,
            pos,
            parent,
            reps,
            inv_reps,
        };
    }

    fn schreier_sims(&mut self, pref: &[u32]) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut restart: Option<usize> = None;
            let orbit = self.levels[li].orbit.clone();
            let gens = self.levels[li].gens.clone();
            'scan: for &beta in &orbit {
                let u_beta = self.rep(li, beta);
                for &s in &gens {
                    let us = u_beta.compose(&self.strong[s]);
                    let gamma = self.strong[s].apply(beta);
                    let mut h = us;
                    self.strip_level(li, gamma, &mut h);
                    if h.is_identity() {
                        continue;
                    }
                    let (res, drop) = self.sift_from(h, li + 1);
                    let k = self.levels.len();
                    if drop < k || !res.is_identity() {
                        if drop == k {
                            let b = first_moved(&res, pref);
                            self.levels.push(Level {
                                base: b,
                                gens: Vec::new(),
                                orbit: Vec::new(),
                                pos: Vec::new(),
                                parent: Vec::new(),
                                reps: None,
                                inv_reps: None,
                            });
                        }
                        self.strong_inv.push(res.inverse());
                        self.strong.push(res);
                        for j in li + 1..=drop {
                            self.recompute_level(j);
                        }
                        restart = Some(drop);
                        break 'scan;
                    }
                }
            }
            match restart {
                Some(d) => i = d as isize,
                None => i -= 1,
            }
        }
    }

    /// Coset representative at level `i` mapping the base point to `x`.
    pub fn rep(&self, i: usize, x: u32) -> Perm {
        let l = &self.levels[i];
        let k = l.pos[x as usize];
        assert!(k != NONE, "point not in basic orbit");
        if let Some(reps) = &l.reps {
            return reps[k as usize].clone();
        }
        let mut path = Vec::new();
        let mut k = k;
        while k != 0 {
            let (p, s) = l.parent[k as usize];
            path.push(s);
            k = p;
        }
        let mut r = Perm::identity(self.degree);
        for &s in path.iter().rev() {
            r = r.compose(&self.strong[s as usize]);
        }
        r
    }

    pub fn rep_inverse(&self, i: usize, x: u32) -> Perm {
        let l = &self.levels[i];
        match &l.inv_reps {
            Some(inv) => inv[l.pos[x as usize] as usize].clone(),
            None => self.rep(i, x).inverse(),
        }
    }

    /// Replaces `h` by `h * u_x^-1`, where `x = h(base_i)`.
    fn strip_level(&self, i: usize, x: u32, h: &mut Perm) {
        let l = &self.levels[i];
        let k = l.pos[x as usize];
        debug_assert!(k != NONE);
        if let Some(inv) = &l.inv_reps {
            *h = h.compose(&inv[k as usize]);
            return;
        }
        let mut k = k;
        while k != 0 {
            let (p, s) = l.parent[k as usize];
            *h = h.compose(&self.strong_inv[s as usize]);
            k = p;
        }
    }

    /// Sifts `h` starting at level `start`; returns residue and the level where
    /// sifting stopped (`levels.len()` when it went through).
    pub fn sift_from(&self, mut h: Perm, start: usize) -> (Perm, usize) {
        for i in start..self.levels.len() {
            let x = h.apply(self.levels[i].base);
            if !self.levels[i].in_orbit(x) {
                return (h, i);
            }
            self.strip_level(i, x, &mut h);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (res, drop) = self.sift_from(p.clone(), 0);
        drop == self.levels.len() && res.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    /// Generators of the pointwise stabilizer of the first `i` base points.
    pub fn level_generators(&self, i: usize) -> Vec<Perm> {
        if i < self.levels.len() {
            self.levels[i]
                .gens
                .iter()
                .map(|&s| self.strong[s].clone())
                .collect()
        } else {
            Vec::new()
        }
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order_u128(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Index of `p` in the canonical enumeration, or `None` if `p` is not in
    /// the group.
    pub fn rank(&self, p: &Perm) -> Option<u64> {
        let mut h: Vec<u32> = p.images().to_vec();
        let mut r: u64 = 0;
        let mut tmp = vec![0u32; self.degree];
        for (i, l) in self.levels.iter().enumerate() {
            let x = h[l.base as usize];
            let k = l.pos[x as usize];
            if k == NONE {
                return None;
            }
            r = r * l.orbit.len() as u64 + k as u64;
            if k != 0 {
                if let Some(inv) = &l.inv_reps {
                    let u = inv[k as usize].images();
                    for (t, &y) in tmp.iter_mut().zip(h.iter()) {
                        *t = u[y as usize];
                    }
                    std::mem::swap(&mut h, &mut tmp);
                } else {
                    let u = self.rep_inverse(i, x);
                    for (t, &y) in tmp.iter_mut().zip(h.iter()) {
                        *t = u.apply(y);
                    }
                    std::mem::swap(&mut h, &mut tmp);
                }
            }
        }
        if h.iter().enumerate().all(|(i, &x)| i as u32 == x) {
            Some(r)
        } else {
            None
        }
    }

    /// Inverse of [`Chain::rank`].
    pub fn unrank(&self, mut r: u64) -> Perm {
        let mut idx = vec![0usize; self.levels.len()];
        for (i, l) in self.levels.iter().enumerate().rev() {
            let m = l.orbit.len() as u64;
            idx[i] = (r % m) as usize;
            r /= m;
        }
        let mut x = Perm::identity(self.degree);
        for (i, l) in self.levels.iter().enumerate().rev() {
            let u = self.rep(i, l.orbit[idx[i]]);
            x = x.compose(&u);
        }
        x
    }

    /// Element built from one coset representative per level, deepest first.
    pub fn element_from_choices(&self, choices: &[usize]) -> Perm {
        let mut x = Perm::identity(self.degree);
        for (i, l) in self.levels.iter().enumerate().rev() {
            x = x.compose(&self.rep(i, l.orbit[choices[i]]));
        }
        x
    }

    /// Points fixed by the pointwise stabilizer of the first `i` base points.
    pub fn fixed_points_of_level(&self, i: usize) -> Vec<u32> {
        let gens = self.level_generators(i);
        (0..self.degree as u32)
            .filter(|&x| gens.iter().all(|g| g.apply(x) == x))
            .collect()
    }
}

fn first_moved(p: &Perm, pref: &[u32]) -> u32 {
    pref.iter()
        .copied()
        .find(|&x| p.apply(x) != x)
        .or_else(|| (0..p.degree() as u32).find(|&x| p.apply(x) != x))
        .expect("identity has no moved point")
}
