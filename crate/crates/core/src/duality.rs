//! `GL(n, q)` extended by the inverse-transpose automorphism.
//!
//! The group acts on nonzero vectors (points `0..m`) and nonzero covectors
//! (points `m..2m`), with `m = q^n - 1`. A matrix `M` sends a vector `v` to
//! `vM` and a covector `f` to `f M^{-T}`, which preserves the pairing
//! `<v, f> = v f^T`. The involution `iota` swaps vector `i` with covector `i`,
//! so conjugating by it induces `M -> M^{-T}`.

use crate::error::{Error, Result};
use crate::flags::{flag_stabilizer, matrix_of};
use crate::gf::{Field, Matrix};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::zoo::gl_matrix_generators;

/// Dimension sequences of the three flag stabilizers of `GL(5, 2)` that are
/// `{2,3}`-Hall subgroups.
pub const GL52_HALL_DIMS: [[usize; 3]; 3] = [[2, 1, 2], [1, 2, 2], [2, 2, 1]];

#[derive(Clone, Debug)]
pub struct DualityExtension {
    pub n: usize,
    pub q: u32,
    /// `GL(n, q) ⋊ <iota>` on `2m` points.
    pub group: PermGroup,
    /// The copy of `GL(n, q)` inside `group`.
    pub inner: PermGroup,
    pub iota: Perm,
    field: Field,
}

impl DualityExtension {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        let field = Field::new(q)?;
        let m = (q as usize).pow(n as u32) - 1;
        let gens: Vec<Perm> = gl_matrix_generators(n, &field)
            .iter()
            .map(|a| doubled(a, &field))
            .collect::<Result<_>>()?;
        let iota_img: Vec<u32> = (0..2 * m as u32)
            .map(|x| if (x as usize) < m { x + m as u32 } else { x - m as u32 })
            .collect();
        let iota = Perm::from_images(iota_img)?;
        let inner = PermGroup::new(2 * m, gens.clone())?;
        let mut all = gens;
        all.push(iota.clone());
        let group = PermGroup::new(2 * m, all)?;
        Ok(DualityExtension {
            n,
            q,
            group,
            inner,
            iota,
            field,
        })
    }

    pub fn vector_points(&self) -> usize {
        (self.q as usize).pow(self.n as u32) - 1
    }

    /// The doubled action of an element of `gl(n, q)` on vectors.
    pub fn embed(&self, p: &Perm) -> Result<Perm> {
        if p.degree() != self.vector_points() {
            return Err(Error::DegreeMismatch(p.degree(), self.vector_points()));
        }
        let m = matrix_of(p, self.n, &self.field);
        let d = doubled(&m, &self.field)?;
        if d.restrict(0, self.vector_points()).as_ref() != Some(p) {
            return Err(Error::NotSubgroup("permutation is not induced by a matrix".into()));
        }
        Ok(d)
    }

    pub fn embed_group(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|p| self.embed(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::from_gens_unchecked(2 * self.vector_points(), gens))
    }

    /// Restriction of an element of the inner `GL(n, q)` to the vectors.
    pub fn restrict(&self, p: &Perm) -> Option<Perm> {
        p.restrict(0, self.vector_points())
    }

    pub fn restrict_group(&self, h: &PermGroup) -> Option<PermGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|p| self.restrict(p))
            .collect::<Option<Vec<_>>>()?;
        Some(PermGroup::from_gens_unchecked(self.vector_points(), gens))
    }

    /// The inverse transpose of a matrix, used to check the action of `iota`.
    pub fn inverse_transpose(&self, m: &Matrix) -> Option<Matrix> {
        Some(m.inverse(&self.field)?.transpose())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

fn doubled(a: &Matrix, f: &Field) -> Result<Perm> {
    let inv_t = a
        .inverse(f)
        .ok_or_else(|| Error::Precondition("singular matrix".into()))?
        .transpose();
    let v = a.vector_action(f);
    let c = inv_t.vector_action(f);
    let m = v.len() as u32;
    let mut img = v;
    img.extend(c.into_iter().map(|x| x + m));
    Perm::from_images(img)
}

/// `GL(5, 2) ⋊ <iota>` on 62 points.
pub fn gl52_hat() -> DualityExtension {
    DualityExtension::new(5, 2).expect("GL(5,2) is supported")
}

/// The three `{2,3}`-Hall flag stabilizers of `gl(5, 2)`, in the order of
/// [`GL52_HALL_DIMS`].
pub fn gl52_hall_flags() -> Result<[PermGroup; 3]> {
    Ok([
        flag_stabilizer(5, 2, &GL52_HALL_DIMS[0])?,
        flag_stabilizer(5, 2, &GL52_HALL_DIMS[1])?,
        flag_stabilizer(5, 2, &GL52_HALL_DIMS[2])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::gl;

    #[test]
    fn small_extension() {
        let d = DualityExtension::new(3, 2).unwrap();
        assert_eq!(d.group.degree(), 14);
        assert_eq!(d.group.order_u128(), 2 * 168);
        assert!(d.iota.compose(&d.iota).is_identity());
        assert!(d.inner.is_normal_in(&d.group));
        let g = gl(3, 2).unwrap();
        for (a, b) in d.inner.generators().iter().zip(g.generators()) {
            assert_eq!(d.restrict(a).as_ref(), Some(b));
        }
    }

    #[test]
    fn iota_acts_by_inverse_transpose() {
        let d = DualityExtension::new(3, 3).unwrap();
        for x in d.inner.generators() {
            let y = x.conjugate(&d.iota);
            assert!(d.inner.contains(&y));
            let mx = matrix_of(&d.restrict(x).unwrap(), 3, d.field());
            let my = matrix_of(&d.restrict(&y).unwrap(), 3, d.field());
            assert_eq!(d.inverse_transpose(&mx).unwrap(), my);
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let d = DualityExtension::new(3, 2).unwrap();
        let g = gl(3, 2).unwrap();
        let a = g.random_element_seeded(1);
        let b = g.random_element_seeded(2);
        assert_eq!(
            d.embed(&a.compose(&b)).unwrap(),
            d.embed(&a).unwrap().compose(&d.embed(&b).unwrap())
        );
    }

    #[test]
    fn gl52_example_groups() {
        use crate::search::{centralizer, normalizer, DEFAULT_NODE_BUDGET};
        let d = gl52_hat();
        assert_eq!(d.group.order_u128(), 19_998_720);
        let g = gl(5, 2).unwrap();
        let hs = gl52_hall_flags().unwrap();
        for h in &hs {
            assert_eq!(h.order_u128(), 9216);
            let n = normalizer(&g, h, DEFAULT_NODE_BUDGET).unwrap();
            assert!(n.same_group(h));
        }
        let c = centralizer(&d.group, &d.inner, DEFAULT_NODE_BUDGET).unwrap();
        assert!(c.is_trivial());
    }
}
