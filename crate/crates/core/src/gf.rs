//! Small finite fields and matrices over them.
//!
//! Field elements are integers `0..q` read as base-`p` digit strings of
//! polynomial coefficients modulo a fixed irreducible polynomial.

use crate::error::{Error, Result};
use crate::group::factorize;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    neg: Vec<u8>,
}

/// Conway-style irreducible polynomials, low coefficient first, monic term omitted.
fn modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    match (p, k) {
        (_, 1) => Some(vec![]),
        (2, 2) => Some(vec![1, 1]),       // x^2 + x + 1
        (2, 3) => Some(vec![1, 1, 0]),    // x^3 + x + 1
        (3, 2) => Some(vec![2, 2]),       // x^2 + 2x + 2
        _ => None,
    }
}

impl Field {
    pub fn new(q: u32) -> Result<Field> {
        let f = factorize(q as u64);
        if f.len() != 1 {
            return Err(Error::Precondition(format!("{q} is not a prime power")));
        }
        let (p, k) = (f[0].0 as u32, f[0].1);
        let m = modulus(p, k)
            .ok_or_else(|| Error::Precondition(format!("GF({q}) not supported")))?;
        let qs = q as usize;
        let digits = |x: u32| -> Vec<u32> { (0..k).map(|i| (x / p.pow(i)) % p).collect() };
        let undigits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s) as u8;
                // schoolbook product then reduce by x^k = -m(x)
                let mut prod = vec![0u32; (2 * k) as usize];
                for i in 0..k as usize {
                    for j in 0..k as usize {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for d in (k as usize..prod.len()).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        for (i, &mi) in m.iter().enumerate() {
                            let t = d - k as usize + i;
                            prod[t] = (prod[t] + (p - mi % p) * c) % p;
                        }
                    }
                }
                mul[(a * q + b) as usize] = undigits(&prod[..k as usize]) as u8;
            }
        }
        let mut inv = vec![0u8; qs];
        let mut neg = vec![0u8; qs];
        for a in 0..q {
            for b in 0..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u8;
                }
                if add[(a * q + b) as usize] == 0 {
                    neg[a as usize] = b as u8;
                }
            }
        }
        Ok(Field {
            p,
            q,
            add,
            mul,
            inv,
            neg,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        let n = self.q - 1;
        (1..self.q as u8)
            .find(|&a| {
                let mut x = 1u8;
                for k in 1..=n {
                    x = self.mul(x, a);
                    if x == 1 {
                        return k == n;
                    }
                }
                false
            })
            .expect("finite field has a primitive element")
    }
}

/// Row vectors of length `n`, indexed by `sum v_i q^i` (coordinate 0 least significant).
pub fn vector_index(v: &[u8], q: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * q as usize + c as usize)
}

pub fn index_vector(mut idx: usize, n: usize, q: u32) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for c in v.iter_mut() {
        *c = (idx % q as usize) as u8;
        idx /= q as usize;
    }
    v
}

/// Square matrix acting on row vectors from the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub n: usize,
    pub entries: Vec<u8>,
}

impl Matrix {
    pub fn identity(n: usize) -> Matrix {
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Matrix {
        let n = rows.len();
        Matrix {
            n,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        self.entries[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        let n = self.n;
        let mut out = Matrix {
            n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u8;
                for k in 0..n {
                    s = f.add(s, f.mul(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, s);
            }
        }
        out
    }

    /// `v * self`.
    pub fn apply_row(&self, v: &[u8], f: &Field) -> Vec<u8> {
        (0..self.n)
            .map(|j| {
                (0..self.n).fold(0u8, |s, k| f.add(s, f.mul(v[k], self.get(k, j))))
            })
            .collect()
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut b = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col) != 0)?;
            if piv != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(piv, j));
                    a.set(col, j, y);
                    a.set(piv, j, x);
                    let (x, y) = (b.get(col, j), b.get(piv, j));
                    b.set(col, j, y);
                    b.set(piv, j, x);
                }
            }
            let s = f.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, f.mul(a.get(col, j), s));
                b.set(col, j, f.mul(b.get(col, j), s));
            }
            for r in 0..n {
                if r != col && a.get(r, col) != 0 {
                    let c = a.get(r, col);
                    for j in 0..n {
                        a.set(r, j, f.sub(a.get(r, j), f.mul(c, a.get(col, j))));
                        b.set(r, j, f.sub(b.get(r, j), f.mul(c, b.get(col, j))));
                    }
                }
            }
        }
        Some(b)
    }

    /// Images of the nonzero row vectors, as a permutation of `0..q^n-1`.
    pub fn vector_action(&self, f: &Field) -> Vec<u32> {
        let q = f.order();
        let total = (q as usize).pow(self.n as u32);
        (1..total)
            .map(|idx| {
                let v = index_vector(idx, self.n, q);
                (vector_index(&self.apply_row(&v, f), q) - 1) as u32
            })
            .collect()
    }
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<u8>], f: &Field) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let s = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, s);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let k = m[i][c];
                for j in 0..cols {
                    let t = f.mul(k, m[r][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Field::new(q).unwrap();
            for a in 0..q as u8 {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
                }
                for b in 0..q as u8 {
                    for c in 0..q as u8 {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            let w = f.primitive_element();
            assert_ne!(w, 0);
        }
        assert!(Field::new(6).is_err());
    }

    #[test]
    fn inverse_matrix() {
        let f = Field::new(3).unwrap();
        let m = Matrix::from_rows(&[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), Matrix::identity(3));
    }
}
