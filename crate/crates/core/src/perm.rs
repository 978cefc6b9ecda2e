//! Permutations of `{0, .., n-1}` stored as image lists.
//!
//! Composition is left to right: `p.compose(&q)` maps `x` to `q(p(x))`.
//! Conjugation follows the same convention, `x^g = g^-1 x g`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Perm {
    img: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NotAPermutation("empty image list".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::NotAPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Perm {
            img: images.into_boxed_slice(),
        })
    }

    /// Unchecked constructor for images already known to be a bijection.
    pub(crate) fn from_vec_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm {
            img: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let x = x as usize;
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotAPermutation(format!("point {x} in two cycles")));
                }
                img[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm {
            img: img.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.img[x as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`. Panics on degree mismatch; see [`Perm::try_compose`].
    #[inline]
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            img: inv.into_boxed_slice(),
        }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        let mut img = vec![0u32; self.degree()];
        for (i, &x) in self.img.iter().enumerate() {
            img[g.img[i] as usize] = g.img[x as usize];
        }
        Perm {
            img: img.into_boxed_slice(),
        }
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.img[start];
            while x as usize != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.img[x as usize];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.img[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    /// Restriction to the points `offset..offset+len`, which must be invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Option<Perm> {
        let mut img = Vec::with_capacity(len);
        for x in offset..offset + len {
            let y = self.img[x] as usize;
            if y < offset || y >= offset + len {
                return None;
            }
            img.push((y - offset) as u32);
        }
        Some(Perm {
            img: img.into_boxed_slice(),
        })
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl TryFrom<Vec<u32>> for Perm {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Perm::from_images(v)
    }
}

impl From<Perm> for Vec<u32> {
    fn from(p: Perm) -> Vec<u32> {
        p.img.into_vec()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn composition_order_convention() {
        // a = (0 1), b = (1 2); "a after b" is b.compose(a)
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(b.compose(&a).images(), &[1, 2, 0]);
        assert_eq!(a.compose(&b).apply(0), b.apply(a.apply(0)));
    }

    #[test]
    fn identity_and_inverse_laws() {
        let p = Perm::from_images(vec![2, 0, 3, 1]).unwrap();
        let e = Perm::identity(4);
        assert_eq!(e.compose(&p), p);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![0, 2]).is_err());
        assert!(Perm::from_images(vec![]).is_err());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert_eq!(a.try_compose(&b), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = Perm::from_images(vec![1, 2, 0, 3]).unwrap();
        let g = Perm::from_images(vec![3, 1, 0, 2]).unwrap();
        let expect = g.inverse().compose(&x).compose(&g);
        assert_eq!(x.conjugate(&g), expect);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_is_associative(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn inverse_is_two_sided(a in arb_perm(9)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
        }

        #[test]
        fn order_kills_element(a in arb_perm(8)) {
            prop_assert!(a.pow(a.order()).is_identity());
        }
    }
}
