//! Deterministic constructors for the test groups.

use crate::error::{Error, Result};
use crate::gf::{Field, Matrix};
use crate::group::{is_prime, PermGroup};
use crate::perm::Perm;

/// Largest degree any zoo constructor will produce.
pub const DEGREE_BUDGET: usize = 10_000;

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > DEGREE_BUDGET {
        return Err(Error::budget(format!("degree {n} outside 1..={DEGREE_BUDGET}")));
    }
    Ok(())
}

fn cycle_perm(n: usize, pts: &[u32]) -> Perm {
    Perm::from_cycles(n, &[pts]).expect("valid cycle")
}

/// Symmetric group on `n` points: adjacent transposition and `n`-cycle.
pub fn sym(n: usize) -> PermGroup {
    try_sym(n).expect("degree within budget")
}

pub fn try_sym(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cycle_perm(n, &[0, 1]), cycle_perm(n, &all)])
}

/// Alternating group on `n` points, generated by the 3-cycles `(0 1 k)`.
pub fn alt(n: usize) -> PermGroup {
    try_alt(n).expect("degree within budget")
}

pub fn try_alt(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    let gens = (2..n as u32).map(|k| cycle_perm(n, &[0, 1, k])).collect();
    PermGroup::new(n, gens)
}

pub fn cyclic(n: usize) -> PermGroup {
    check_degree(n).expect("degree within budget");
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::from_gens_unchecked(n, vec![cycle_perm(n, &all)])
}

/// Dihedral group of order `2n` acting on the `n` vertices of a polygon.
pub fn dihedral(n: usize) -> PermGroup {
    check_degree(n).expect("degree within budget");
    if n <= 2 {
        // order 2n on n points is impossible for n <= 2; use the Klein/ C2 cases on 2n points
        return match n {
            1 => cyclic(2),
            _ => direct_product(&cyclic(2), &cyclic(2)),
        };
    }
    let all: Vec<u32> = (0..n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::from_gens_unchecked(
        n,
        vec![cycle_perm(n, &all), Perm::from_vec_unchecked(refl)],
    )
}

fn shift(p: &Perm, offset: usize, total: usize) -> Perm {
    let mut img: Vec<u32> = (0..total as u32).collect();
    for x in 0..p.degree() {
        img[offset + x] = (offset as u32) + p.apply(x as u32);
    }
    Perm::from_vec_unchecked(img)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let n = g.degree() + h.degree();
    let mut gens: Vec<Perm> = g.generators().iter().map(|x| shift(x, 0, n)).collect();
    gens.extend(h.generators().iter().map(|x| shift(x, g.degree(), n)));
    PermGroup::from_gens_unchecked(n, gens)
}

/// The `k`-th factor of a direct product built by [`direct_product`], embedded.
pub fn embed_factor(factor: &PermGroup, offset: usize, total: usize) -> PermGroup {
    PermGroup::from_gens_unchecked(
        total,
        factor
            .generators()
            .iter()
            .map(|x| shift(x, offset, total))
            .collect(),
    )
}

/// `g wr C_k` in its imprimitive action on `k` copies of the points of `g`.
pub fn wreath(g: &PermGroup, k: usize) -> PermGroup {
    let m = g.degree();
    let n = m * k;
    check_degree(n).expect("degree within budget");
    let mut gens: Vec<Perm> = g.generators().iter().map(|x| shift(x, 0, n)).collect();
    if k > 1 {
        let top: Vec<u32> = (0..n as u32).map(|x| (x + m as u32) % n as u32).collect();
        gens.push(Perm::from_vec_unchecked(top));
    }
    PermGroup::from_gens_unchecked(n, gens)
}

/// Affine group `x -> a x + b` over `GF(p)`, optionally restricted to
/// multipliers in the subgroup of index `index` of `GF(p)^*`.
pub fn affine(p: u32, index: u32) -> Result<PermGroup> {
    if !is_prime(p as u64) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let n = p as usize;
    let f = Field::new(p)?;
    let w = f.primitive_element();
    let mut a = 1u8;
    for _ in 0..index {
        a = f.mul(a, w);
    }
    let trans: Vec<u32> = (0..p).map(|x| (x + 1) % p).collect();
    let mult: Vec<u32> = (0..p).map(|x| f.mul(x as u8, a) as u32).collect();
    PermGroup::new(
        n,
        vec![
            Perm::from_vec_unchecked(trans),
            Perm::from_vec_unchecked(mult),
        ],
    )
}

/// `PSL(2, p)` acting on the `p + 1` points of the projective line
/// (`0..p` affine, `p` is infinity).
pub fn psl2(p: u32) -> Result<PermGroup> {
    if !is_prime(p as u64) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let n = p as usize + 1;
    check_degree(n)?;
    let f = Field::new(p)?;
    let inf = p;
    let w = f.primitive_element();
    let w2 = f.mul(w, w);
    let t: Vec<u32> = (0..=p).map(|z| if z == inf { inf } else { (z + 1) % p }).collect();
    let d: Vec<u32> = (0..=p)
        .map(|z| if z == inf { inf } else { f.mul(w2, z as u8) as u32 })
        .collect();
    let s: Vec<u32> = (0..=p)
        .map(|z| {
            if z == inf {
                0
            } else if z == 0 {
                inf
            } else {
                f.neg(f.inv(z as u8)) as u32
            }
        })
        .collect();
    PermGroup::new(
        n,
        [t, d, s]
            .into_iter()
            .map(Perm::from_vec_unchecked)
            .filter(|g| !g.is_identity())
            .collect(),
    )
}

/// Matrix generators of `GL(n, q)`: elementary transvections `I + E_{i,i+1}`,
/// `I + E_{i+1,i}` and `diag(w, 1, .., 1)`.
pub fn gl_matrix_generators(n: usize, f: &Field) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut a = Matrix::identity(n);
        a.set(i, i + 1, 1);
        out.push(a);
        let mut b = Matrix::identity(n);
        b.set(i + 1, i, 1);
        out.push(b);
    }
    if f.order() > 2 {
        let mut d = Matrix::identity(n);
        d.set(0, 0, f.primitive_element());
        out.push(d);
    }
    out
}

/// `GL(n, q)` acting on the `q^n - 1` nonzero row vectors.
pub fn gl(n: usize, q: u32) -> Result<PermGroup> {
    if n == 0 || n > 6 || q > 9 {
        return Err(Error::Precondition(format!("gl({n},{q}) outside n<=6, q<=9")));
    }
    let f = Field::new(q)?;
    let deg = (q as usize).pow(n as u32) - 1;
    check_degree(deg)?;
    let gens = gl_matrix_generators(n, &f)
        .iter()
        .map(|m| Perm::from_vec_unchecked(m.vector_action(&f)))
        .collect();
    PermGroup::new(deg, gens)
}

/// Order of `GL(n, q)`.
pub fn gl_order(n: u32, q: u64) -> u128 {
    let qn = (q as u128).pow(n);
    (0..n).fold(1u128, |acc, i| acc * (qn - (q as u128).pow(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(sym(4).order_u128(), 24);
        assert_eq!(alt(5).order_u128(), 60);
        assert_eq!(cyclic(7).order_u128(), 7);
        assert_eq!(dihedral(4).order_u128(), 8);
        assert_eq!(direct_product(&alt(5), &alt(5)).order_u128(), 3600);
        assert_eq!(wreath(&sym(3), 2).order_u128(), 72);
        assert_eq!(psl2(7).unwrap().order_u128(), 168);
        assert_eq!(psl2(11).unwrap().order_u128(), 660);
        assert_eq!(psl2(13).unwrap().order_u128(), 1092);
        assert_eq!(gl(3, 2).unwrap().order_u128(), 168);
        assert_eq!(gl(2, 3).unwrap().order_u128(), 48);
        assert_eq!(gl(2, 4).unwrap().order_u128(), 180);
        assert_eq!(affine(7, 2).unwrap().order_u128(), 21);
    }

    #[test]
    fn gl52_order() {
        let g = gl(5, 2).unwrap();
        assert_eq!(g.order_u128(), 9_999_360);
        assert_eq!(g.orbit(0).unwrap().len(), 31);
        assert_eq!(gl_order(5, 2), 9_999_360);
    }

    #[test]
    fn constructors_are_deterministic() {
        assert_eq!(gl(3, 3).unwrap().generators(), gl(3, 3).unwrap().generators());
        assert_eq!(psl2(13).unwrap().generators(), psl2(13).unwrap().generators());
    }

    #[test]
    fn degree_budget() {
        assert!(try_sym(DEGREE_BUDGET + 1).is_err());
        assert!(gl(7, 2).is_err());
    }
}
