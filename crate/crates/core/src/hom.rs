//! Coset spaces, coset actions and homomorphisms between permutation groups.
//!
//! A homomorphism `phi: G -> Q` is stored through the diagonal group
//! `D = {(g, phi(g))}` acting on the disjoint union of both point sets.
//! Evaluating `phi` sifts through a chain of `D` whose base lies in the
//! source block; lifting sifts through a chain whose base starts in the
//! image block, and the kernel is the pointwise stabilizer of that block.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bsgs::Chain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Default bound on the number of cosets any coset action may enumerate.
pub const DEFAULT_INDEX_BUDGET: usize = 100_000;

/// Right cosets `Hx` of a subgroup, labelled canonically by the
/// lexicographically smallest image of a base of the ambient group.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    base: Vec<u32>,
    chain: Arc<Chain>,
}

impl CosetSpace {
    /// `ambient_base` must be a base for every permutation that will be labelled.
    pub fn new(h: &PermGroup, ambient_base: &[u32]) -> Self {
        let chain = h.chain_with_base(ambient_base, None);
        CosetSpace {
            base: chain.base(),
            chain: Arc::new(chain),
        }
    }

    /// Canonical label of `Hx`.
    pub fn label(&self, x: &Perm) -> Vec<u32> {
        self.canonical(x).1
    }

    /// The canonical element of `Hx` together with its label.
    pub fn canonical(&self, x: &Perm) -> (Perm, Vec<u32>) {
        let mut c = x.clone();
        let mut label = Vec::with_capacity(self.base.len());
        for (i, level) in self.chain.levels().iter().enumerate() {
            // among h in H^(i), minimise c(h(b_i))
            let best = level
                .orbit()
                .iter()
                .copied()
                .min_by_key(|&o| c.apply(o))
                .expect("orbit contains the base point");
            if best != level.base_point() {
                c = self.chain.rep(i, best).compose(&c);
            }
            label.push(c.apply(self.base[i]));
        }
        (c, label)
    }
}

/// The action of `G` on the right cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub image: PermGroup,
    pub hom: Hom,
    /// Canonical representative of each coset, indexed by point.
    pub reps: Vec<Perm>,
    space: CosetSpace,
    index: HashMap<Vec<u32>, u32>,
}

impl CosetAction {
    /// The point of the coset `Hx`, if `x` lies in the acting group.
    pub fn point_of(&self, x: &Perm) -> Option<u32> {
        self.index.get(&self.space.label(x)).copied()
    }
}

pub fn action_on_cosets(g: &PermGroup, h: &PermGroup, budget: usize) -> Result<CosetAction> {
    let idx = g.order_u128() / h.order_u128().max(1);
    if idx > budget as u128 {
        return Err(Error::budget(format!(
            "coset action of index {idx} exceeds budget {budget}"
        )));
    }
    let base = g.chain().base();
    let space = CosetSpace::new(h, &base);
    let id = Perm::identity(g.degree());
    let (c0, l0) = space.canonical(&id);
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    index.insert(l0, 0);
    let mut reps = vec![c0];
    let gens = g.generators();
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        for (k, s) in gens.iter().enumerate() {
            let (c, l) = space.canonical(&r.compose(s));
            let next = reps.len() as u32;
            let j = *index.entry(l).or_insert_with(|| {
                reps.push(c);
                next
            });
            images[k].push(j);
        }
        head += 1;
    }
    let m = reps.len();
    let img_gens: Vec<Perm> = images.into_iter().map(Perm::from_vec_unchecked).collect();
    let image = PermGroup::from_gens_unchecked(m, img_gens.clone());
    let hom = Hom::from_images(g, &image, img_gens)?;
    Ok(CosetAction {
        image,
        hom,
        reps,
        space,
        index,
    })
}

/// A faithful permutation representation of `G/A` for a normal `a`.
///
/// The orbits of `a` form a block system for `g`; when the kernel of the
/// action on blocks is exactly `a` that action is used (typically far
/// smaller than the coset action), otherwise the action on the cosets of
/// `a`.
pub fn quotient(g: &PermGroup, a: &PermGroup, index_budget: usize) -> Result<(PermGroup, Hom)> {
    if a.is_trivial() {
        let gens = g.generators().to_vec();
        let hom = Hom::from_images(g, g, gens)?;
        return Ok((g.clone(), hom));
    }
    let n = g.degree();
    let mut block = vec![u32::MAX; n];
    let mut count = 0u32;
    for orbit in a.orbits() {
        for &x in &orbit {
            block[x as usize] = count;
        }
        count += 1;
    }
    let mut first = vec![0u32; count as usize];
    for x in (0..n).rev() {
        first[block[x] as usize] = x as u32;
    }
    let images: Vec<Perm> = g
        .generators()
        .iter()
        .map(|s| Perm::from_vec_unchecked(first.iter().map(|&x| block[s.apply(x) as usize]).collect()))
        .collect();
    let image = PermGroup::from_gens_unchecked(count as usize, images.clone());
    let hom = Hom::from_images(g, &image, images)?;
    if image.order_u128() * a.order_u128() == g.order_u128() {
        return Ok((image, hom));
    }
    let act = action_on_cosets(g, a, index_budget)?;
    Ok((act.image, act.hom))
}

/// Conjugation action of `ambient` on the nontrivial cosets of `b` in `a`
/// (`b` normal in `a`, both normalized by `ambient`). Points are the cosets
/// `bx != b`.
pub fn conjugation_on_section(
    ambient: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    budget: usize,
) -> Result<(PermGroup, Hom, Vec<Perm>)> {
    let idx = a.order_u128() / b.order_u128();
    if idx > budget as u128 + 1 {
        return Err(Error::budget(format!(
            "section of order {idx} exceeds element-action budget {budget}"
        )));
    }
    let base = ambient.chain().base();
    let space = CosetSpace::new(b, &base);
    let id = Perm::identity(a.degree());
    let (_, l0) = space.canonical(&id);
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut reps: Vec<Perm> = Vec::new();
    let mut queue = vec![id];
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    seen.insert(l0.clone(), ());
    let mut head = 0;
    while head < queue.len() {
        let r = queue[head].clone();
        head += 1;
        for s in a.generators() {
            let (c, l) = space.canonical(&r.compose(s));
            if seen.insert(l.clone(), ()).is_none() {
                index.insert(l, reps.len() as u32);
                reps.push(c.clone());
                queue.push(c);
            }
        }
    }
    let m = reps.len();
    if m == 0 {
        let image = PermGroup::trivial(1);
        let hom = Hom::from_images(ambient, &image, vec![Perm::identity(1); ambient.generators().len()])?;
        return Ok((image, hom, reps));
    }
    let mut img_gens = Vec::new();
    for g in ambient.generators() {
        let img: Vec<u32> = reps
            .iter()
            .map(|r| {
                let l = space.label(&r.conjugate(g));
                *index.get(&l).expect("section is normalized by the ambient group")
            })
            .collect();
        img_gens.push(Perm::from_images(img)?);
    }
    let image = PermGroup::from_gens_unchecked(m, img_gens.clone());
    let hom = Hom::from_images(ambient, &image, img_gens)?;
    Ok((image, hom, reps))
}

/// The conjugation action of `ambient` on a union of its orbits on the
/// nontrivial cosets of `b` in `a` that generates `a` modulo `b`. An element
/// fixing a generating set of `A/B` centralizes `A/B`, so the action has
/// the same kernel as the action on all cosets, on far fewer points.
/// Orbits are taken smallest first.
pub fn generating_section_action(
    ambient: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
    budget: usize,
) -> Result<(PermGroup, Hom)> {
    let (image, hom, reps) = conjugation_on_section(ambient, a, b, budget)?;
    if reps.is_empty() {
        return Ok((image, hom));
    }
    let mut orbits = image.orbits();
    orbits.sort_by_key(|o| (o.len(), o[0]));
    let target = a.order_u128();
    let mut span = b.clone();
    let mut points: Vec<u32> = Vec::new();
    for o in &orbits {
        if span.order_u128() == target {
            break;
        }
        if span.contains(&reps[o[0] as usize]) {
            continue;
        }
        points.extend_from_slice(o);
        for &x in o {
            if !span.contains(&reps[x as usize]) {
                span = span.with_element(&reps[x as usize]);
            }
        }
    }
    points.sort_unstable();
    if points.len() == reps.len() {
        return Ok((image, hom));
    }
    let mut new_index = vec![u32::MAX; reps.len()];
    for (i, &x) in points.iter().enumerate() {
        new_index[x as usize] = i as u32;
    }
    let gens: Vec<Perm> = hom
        .generator_images()
        .iter()
        .map(|g| Perm::from_vec_unchecked(points.iter().map(|&x| new_index[g.apply(x) as usize]).collect()))
        .collect();
    let image = PermGroup::from_gens_unchecked(points.len(), gens.clone());
    let hom = Hom::from_images(ambient, &image, gens)?;
    Ok((image, hom))
}

/// A homomorphism given by images of the generators of its source.
#[derive(Clone, Debug)]
pub struct Hom {
    source: PermGroup,
    target_degree: usize,
    gen_images: Vec<Perm>,
    diag_gens: Vec<Perm>,
    source_first: Arc<OnceLock<Chain>>,
    image_first: Arc<OnceLock<Chain>>,
}

impl Hom {
    /// The caller guarantees that the images define a homomorphism.
    pub fn from_images(source: &PermGroup, target: &PermGroup, images: Vec<Perm>) -> Result<Hom> {
        if images.len() != source.generators().len() {
            return Err(Error::Precondition(
                "one image per source generator is required".into(),
            ));
        }
        let n = source.degree();
        let m = target.degree();
        let diag_gens = source
            .generators()
            .iter()
            .zip(&images)
            .map(|(g, x)| {
                if x.degree() != m {
                    return Err(Error::DegreeMismatch(x.degree(), m));
                }
                let mut img: Vec<u32> = g.images().to_vec();
                img.extend(x.images().iter().map(|&y| y + n as u32));
                Ok(Perm::from_vec_unchecked(img))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Hom {
            source: source.clone(),
            target_degree: m,
            gen_images: images,
            diag_gens,
            source_first: Arc::new(OnceLock::new()),
            image_first: Arc::new(OnceLock::new()),
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.gen_images
    }

    fn n(&self) -> usize {
        self.source.degree()
    }

    fn source_chain(&self) -> &Chain {
        self.source_first.get_or_init(|| {
            let pref: Vec<u32> = (0..(self.n() + self.target_degree) as u32).collect();
            Chain::build(self.n() + self.target_degree, &self.diag_gens, &[], Some(&pref))
        })
    }

    fn image_chain(&self) -> &Chain {
        self.image_first.get_or_init(|| {
            // a base of the image, placed first, makes the later levels the kernel
            let n = self.n() as u32;
            let image = PermGroup::from_gens_unchecked(self.target_degree, self.gen_images.clone());
            let prefix: Vec<u32> = image.chain().base().iter().map(|&b| b + n).collect();
            Chain::build(self.n() + self.target_degree, &self.diag_gens, &prefix, None)
        })
    }

    /// Finds `d` in the diagonal group agreeing with `t` on the base points of
    /// `chain` that lie in `block`.
    fn match_block(chain: &Chain, t: &Perm, block: std::ops::Range<u32>) -> Option<Perm> {
        let mut residue = t.clone();
        let mut d = Perm::identity(t.degree());
        for (i, level) in chain.levels().iter().enumerate() {
            let b = level.base_point();
            if !block.contains(&b) {
                break;
            }
            let x = residue.apply(b);
            if !level.in_orbit(x) {
                return None;
            }
            let u = chain.rep(i, x);
            residue = residue.compose(&u.inverse());
            d = u.compose(&d);
        }
        Some(d)
    }

    fn widen(&self, x: &Perm, on_source: bool) -> Perm {
        let n = self.n();
        let m = self.target_degree;
        let mut img: Vec<u32> = (0..(n + m) as u32).collect();
        if on_source {
            img[..n].copy_from_slice(x.images());
        } else {
            for (i, &y) in x.images().iter().enumerate() {
                img[n + i] = y + n as u32;
            }
        }
        Perm::from_vec_unchecked(img)
    }

    /// `phi(x)` for `x` in the source group.
    pub fn image_of(&self, x: &Perm) -> Result<Perm> {
        let n = self.n() as u32;
        let t = self.widen(x, true);
        let d = Self::match_block(self.source_chain(), &t, 0..n)
            .ok_or(Error::NotSubgroup("element outside the source group".into()))?;
        if d.restrict(0, self.n()).as_ref() != Some(x) {
            return Err(Error::NotSubgroup("element outside the source group".into()));
        }
        Ok(d.restrict(self.n(), self.target_degree).expect("block preserved"))
    }

    /// Some preimage of `y`, which must lie in the image.
    pub fn lift(&self, y: &Perm) -> Result<Perm> {
        let n = self.n() as u32;
        let total = n + self.target_degree as u32;
        let t = self.widen(y, false);
        let d = Self::match_block(self.image_chain(), &t, n..total)
            .ok_or(Error::NotSubgroup("element outside the image".into()))?;
        if d.restrict(self.n(), self.target_degree).as_ref() != Some(y) {
            return Err(Error::NotSubgroup("element outside the image".into()));
        }
        Ok(d.restrict(0, self.n()).expect("block preserved"))
    }

    pub fn kernel(&self) -> PermGroup {
        let n = self.n() as u32;
        let chain = self.image_chain();
        let depth = chain
            .levels()
            .iter()
            .take_while(|l| l.base_point() >= n)
            .count();
        let gens: Vec<Perm> = chain
            .level_generators(depth)
            .iter()
            .filter_map(|d| d.restrict(0, self.n()))
            .collect();
        PermGroup::from_gens_unchecked(self.n(), gens)
    }

    /// `phi(K)` for a subgroup `K` of the source.
    pub fn image_group(&self, k: &PermGroup) -> Result<PermGroup> {
        let gens = k
            .generators()
            .iter()
            .map(|x| self.image_of(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::from_gens_unchecked(self.target_degree, gens))
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, kbar: &PermGroup) -> Result<PermGroup> {
        let mut gens: Vec<Perm> = self.kernel().generators().to_vec();
        for y in kbar.generators() {
            gens.push(self.lift(y)?);
        }
        Ok(PermGroup::from_gens_unchecked(self.n(), gens))
    }
}
