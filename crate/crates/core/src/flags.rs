//! Flags of subspaces in `GF(q)^n` and their stabilizers in `GL(n, q)`.
//!
//! The standard flag with dimension sequence `(d_1, .., d_r)` has
//! `V_k = span(e_0, .., e_{D_k - 1})` with `D_k = d_1 + .. + d_k`. Since
//! matrices act on row vectors from the right, its stabilizer consists of
//! block lower triangular matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fingerprint::Fingerprint;
use crate::gf::{index_vector, rank, vector_index, Field, Matrix};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::search::{label_stabilizer, DEFAULT_NODE_BUDGET};
use crate::zoo::{gl, gl_order};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub n: usize,
    pub q: u32,
    pub dims: Vec<usize>,
    /// `subspaces[k]` is a basis of `V_{k+1}`; the last entry spans everything.
    pub subspaces: Vec<Vec<Vec<u8>>>,
}

impl Flag {
    pub fn standard(n: usize, q: u32, dims: &[usize]) -> Result<Flag> {
        if dims.is_empty() || dims.contains(&0) || dims.iter().sum::<usize>() != n {
            return Err(Error::Precondition(format!(
                "dimension sequence {dims:?} is not a composition of {n}"
            )));
        }
        let mut subspaces = Vec::new();
        let mut total = 0;
        for &d in dims {
            total += d;
            subspaces.push(
                (0..total)
                    .map(|i| {
                        let mut v = vec![0u8; n];
                        v[i] = 1;
                        v
                    })
                    .collect(),
            );
        }
        Ok(Flag {
            n,
            q,
            dims: dims.to_vec(),
            subspaces,
        })
    }

    /// For each nonzero vector (as a point), the index of the first subspace containing it.
    pub fn layer_labels(&self, f: &Field) -> Vec<u32> {
        let total = (self.q as usize).pow(self.n as u32);
        let mut label = vec![u32::MAX; total - 1];
        for (k, basis) in self.subspaces.iter().enumerate() {
            for idx in span(basis, f) {
                if idx != 0 && label[idx - 1] == u32::MAX {
                    label[idx - 1] = k as u32;
                }
            }
        }
        label
    }

    /// A basis whose first `D_k` rows span `V_k` for every `k`.
    pub fn adapted_basis(&self, f: &Field) -> Matrix {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for basis in &self.subspaces {
            for v in basis {
                let mut trial = rows.clone();
                trial.push(v.clone());
                if rank(&trial, f) > rows.len() {
                    rows = trial;
                }
            }
        }
        Matrix::from_rows(&rows)
    }
}

/// Indices of all vectors in the span of `basis`, zero included.
fn span(basis: &[Vec<u8>], f: &Field) -> Vec<usize> {
    let q = f.order() as usize;
    let n = basis.first().map_or(0, |v| v.len());
    let mut out = Vec::with_capacity(q.pow(basis.len() as u32));
    for combo in 0..q.pow(basis.len() as u32) {
        let coeffs = index_vector(combo, basis.len(), q as u32);
        let mut v = vec![0u8; n];
        for (c, b) in coeffs.iter().zip(basis) {
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
        out.push(vector_index(&v, q as u32));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// `|GL_{d_1}(q)| * .. * |GL_{d_r}(q)| * q^{sum_{i<j} d_i d_j}`.
pub fn parabolic_order(q: u64, dims: &[usize]) -> u128 {
    let levi: u128 = dims.iter().map(|&d| gl_order(d as u32, q)).product();
    let mut unipotent = 0u32;
    for i in 0..dims.len() {
        for j in i + 1..dims.len() {
            unipotent += (dims[i] * dims[j]) as u32;
        }
    }
    levi * (q as u128).pow(unipotent)
}

/// Stabilizer in `gl(n, q)` of the standard flag, found as the stabilizer
/// of the layer labelling of the nonzero vectors and checked against
/// [`parabolic_order`].
pub fn flag_stabilizer(n: usize, q: u32, dims: &[usize]) -> Result<PermGroup> {
    let g = gl(n, q)?;
    let flag = Flag::standard(n, q, dims)?;
    stabilizer_of_flag(&g, &flag)
}

pub fn stabilizer_of_flag(g: &PermGroup, flag: &Flag) -> Result<PermGroup> {
    let f = Field::new(flag.q)?;
    let label = flag.layer_labels(&f);
    let h = label_stabilizer(g, &label, DEFAULT_NODE_BUDGET)?;
    let expect = parabolic_order(flag.q as u64, &flag.dims);
    if h.order_u128() != expect {
        return Err(Error::Verification(format!(
            "flag stabilizer has order {} but the parabolic formula gives {expect}",
            h.order_u128()
        )));
    }
    Ok(h)
}

/// The matrix of a permutation of nonzero vectors that comes from `GL(n, q)`.
pub fn matrix_of(p: &Perm, n: usize, f: &Field) -> Matrix {
    let q = f.order();
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let e = (q as usize).pow(i as u32);
            index_vector(p.apply((e - 1) as u32) as usize + 1, n, q)
        })
        .collect();
    Matrix::from_rows(&rows)
}

/// Reads off the flag stabilized by `h` from its orbits on nonzero vectors.
/// Returns `None` when the orbits do not nest into a chain of subspaces.
pub fn recover_flag(h: &PermGroup, n: usize, q: u32) -> Result<Option<Flag>> {
    let f = Field::new(q)?;
    let total = (q as usize).pow(n as u32);
    if h.degree() != total - 1 {
        return Err(Error::DegreeMismatch(h.degree(), total - 1));
    }
    let mut orbits = h.orbits();
    let mut inside = vec![false; total];
    inside[0] = true;
    let mut count = 1;
    let mut dims = Vec::new();
    let mut subspaces: Vec<Vec<Vec<u8>>> = Vec::new();
    let mut basis: Vec<Vec<u8>> = Vec::new();
    while count < total {
        let pick = orbits.iter().position(|o| {
            let mut trial = inside.clone();
            for &x in o {
                trial[x as usize + 1] = true;
            }
            is_subspace(&trial, n, &f)
        });
        let Some(pick) = pick else {
            return Ok(None);
        };
        let o = orbits.remove(pick);
        for &x in &o {
            inside[x as usize + 1] = true;
        }
        count += o.len();
        let before = basis.len();
        for &x in &o {
            let v = index_vector(x as usize + 1, n, q);
            let mut trial = basis.clone();
            trial.push(v);
            if rank(&trial, &f) > basis.len() {
                basis = trial;
            }
        }
        dims.push(basis.len() - before);
        subspaces.push(basis.clone());
    }
    Ok(Some(Flag {
        n,
        q,
        dims,
        subspaces,
    }))
}

fn is_subspace(members: &[bool], n: usize, f: &Field) -> bool {
    let q = f.order();
    let elems: Vec<Vec<u8>> = members
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(i, _)| index_vector(i, n, q))
        .collect();
    let size = elems.len();
    if !(0..=n as u32).any(|k| (q as usize).pow(k) == size) {
        return false;
    }
    for a in &elems {
        for b in &elems {
            let s: Vec<u8> = a.iter().zip(b).map(|(x, y)| f.add(*x, *y)).collect();
            if !members[vector_index(&s, q)] {
                return false;
            }
        }
        for c in 2..q as u8 {
            let s: Vec<u8> = a.iter().map(|x| f.mul(c, *x)).collect();
            if !members[vector_index(&s, q)] {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlagConjugacy {
    /// `h_a^g = h_b`.
    Conjugate(Perm),
    /// Dimension sequences differ; the orbit-length multisets certify it.
    Distinct {
        dims_a: Vec<usize>,
        dims_b: Vec<usize>,
        fingerprint_a: Fingerprint,
        fingerprint_b: Fingerprint,
    },
}

/// Decides conjugacy in `GL(n, q)` of two flag stabilizers by linear algebra:
/// an adapted basis of one flag is mapped onto an adapted basis of the other.
pub fn flag_conjugator(h_a: &PermGroup, h_b: &PermGroup, n: usize, q: u32) -> Result<FlagConjugacy> {
    let f = Field::new(q)?;
    let fa = recover_flag(h_a, n, q)?
        .ok_or_else(|| Error::Precondition("first subgroup stabilizes no flag".into()))?;
    let fb = recover_flag(h_b, n, q)?
        .ok_or_else(|| Error::Precondition("second subgroup stabilizes no flag".into()))?;
    let g = gl(n, q)?;
    for (h, fl) in [(h_a, &fa), (h_b, &fb)] {
        if h.order_u128() != parabolic_order(q as u64, &fl.dims) {
            return Err(Error::Precondition(
                "subgroup is smaller than the stabilizer of its flag".into(),
            ));
        }
    }
    if fa.dims != fb.dims {
        return Ok(FlagConjugacy::Distinct {
            dims_a: fa.dims,
            dims_b: fb.dims,
            fingerprint_a: Fingerprint::of(&g, h_a),
            fingerprint_b: Fingerprint::of(&g, h_b),
        });
    }
    let ba = fa.adapted_basis(&f);
    let bb = fb.adapted_basis(&f);
    let m = ba
        .inverse(&f)
        .ok_or_else(|| Error::Verification("adapted basis is singular".into()))?
        .mul(&bb, &f);
    let x = Perm::from_vec_unchecked(m.vector_action(&f));
    if !h_a.conjugate(&x).same_group(h_b) {
        return Err(Error::Verification(
            "flag-mapping matrix does not conjugate the stabilizers".into(),
        ));
    }
    Ok(FlagConjugacy::Conjugate(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_orders() {
        assert_eq!(parabolic_order(2, &[2, 1, 2]), 9216);
        assert_eq!(parabolic_order(2, &[5]), gl_order(5, 2));
        assert_eq!(parabolic_order(3, &[1, 1]), 2 * 2 * 3);
    }

    #[test]
    fn small_flag_stabilizers() {
        let h = flag_stabilizer(3, 2, &[1, 2]).unwrap();
        assert_eq!(h.order_u128(), 24);
        let whole = flag_stabilizer(3, 2, &[3]).unwrap();
        assert!(whole.same_group(&gl(3, 2).unwrap()));
        let borel = flag_stabilizer(3, 3, &[1, 1, 1]).unwrap();
        assert_eq!(borel.order_u128(), 8 * 27);
    }

    #[test]
    fn recover_and_conjugate() {
        let a = flag_stabilizer(3, 2, &[1, 2]).unwrap();
        let b = flag_stabilizer(3, 2, &[2, 1]).unwrap();
        assert_eq!(recover_flag(&a, 3, 2).unwrap().unwrap().dims, vec![1, 2]);
        match flag_conjugator(&a, &b, 3, 2).unwrap() {
            FlagConjugacy::Distinct { fingerprint_a, fingerprint_b, .. } => {
                assert_ne!(fingerprint_a, fingerprint_b)
            }
            other => panic!("expected distinct, got {other:?}"),
        }
        let g = gl(3, 2).unwrap();
        let x = g.random_element_seeded(5);
        let a2 = a.conjugate(&x);
        match flag_conjugator(&a, &a2, 3, 2).unwrap() {
            FlagConjugacy::Conjugate(y) => assert!(g.contains(&y)),
            other => panic!("expected conjugate, got {other:?}"),
        }
    }

    #[test]
    fn matrix_round_trip() {
        let f = Field::new(3).unwrap();
        let g = gl(3, 3).unwrap();
        let x = g.random_element_seeded(9);
        let m = matrix_of(&x, 3, &f);
        assert_eq!(Perm::from_images(m.vector_action(&f)).unwrap(), x);
    }
}
