use std::fmt;
use std::ops::Mul;

use super::perm::Permutation;
use crate::num::{gcd, q, Q};
use crate::{Error, Result};

/// The element `t^λ u` of `ℤ^n ⋊ S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElement {
    trans: Vec<i64>,
    perm: Permutation,
}

impl ExtAffineElement {
    pub fn new(trans: Vec<i64>, perm: Permutation) -> Result<Self> {
        if trans.len() != perm.len() {
            return Err(Error::DimensionMismatch {
                expected: perm.len(),
                got: trans.len(),
            });
        }
        Ok(Self { trans, perm })
    }

    pub(crate) fn from_parts(trans: Vec<i64>, perm: Permutation) -> Self {
        debug_assert_eq!(trans.len(), perm.len());
        Self { trans, perm }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            trans: vec![0; n],
            perm: Permutation::identity(n),
        }
    }

    pub fn translation(lambda: &[i64]) -> Self {
        Self {
            trans: lambda.to_vec(),
            perm: Permutation::identity(lambda.len()),
        }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        Self {
            trans: vec![0; perm.len()],
            perm,
        }
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }

    pub fn trans(&self) -> &[i64] {
        &self.trans
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.trans.iter().all(|&x| x == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.perm.is_identity()
    }

    /// `(t^a u)(t^b v) = t^{a + u(b)} uv`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let moved = self.perm.act(&other.trans);
        let trans = self.trans.iter().zip(&moved).map(|(a, b)| a + b).collect();
        Self {
            trans,
            perm: self.perm.compose(&other.perm),
        }
    }

    /// `(t^a u)^{-1} = t^{-u^{-1}(a)} u^{-1}`.
    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let trans = inv.act(&self.trans).into_iter().map(|x| -x).collect();
        Self { trans, perm: inv }
    }

    /// `g self g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul_unchecked(self).mul_unchecked(&g.inverse())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.rank());
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Affine action `v ↦ u(v) + λ` on `ℚ^n`.
    pub fn apply_affine(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        let moved = self.perm.act(v);
        Ok(moved
            .into_iter()
            .zip(&self.trans)
            .map(|(x, &l)| x + q(l))
            .collect())
    }

    /// Sum of the translation entries over `range`.
    pub(crate) fn trans_sum(&self, range: std::ops::Range<usize>) -> i64 {
        self.trans[range].iter().sum()
    }

    /// The element induced on the stable coordinate set `coords` (0-based).
    pub(crate) fn gather(&self, coords: &[usize]) -> Self {
        Self {
            trans: coords.iter().map(|&i| self.trans[i]).collect(),
            perm: self.perm.gather(coords),
        }
    }

    /// Places `self` on `coords` inside rank `n`, the identity elsewhere.
    pub(crate) fn scatter(&self, n: usize, coords: &[usize]) -> Self {
        let mut trans = vec![0; n];
        for (k, &i) in coords.iter().enumerate() {
            trans[i] = self.trans[k];
        }
        Self {
            trans,
            perm: self.perm.scatter(n, coords),
        }
    }
}

impl Mul for &ExtAffineElement {
    type Output = ExtAffineElement;

    fn mul(self, rhs: &ExtAffineElement) -> ExtAffineElement {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in product");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.trans.iter().map(|x| x.to_string()).collect();
        write!(f, "t[{}]", parts.join(","))?;
        if !self.perm.is_identity() {
            write!(f, "*{}", self.perm)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `σ_{m,n} = t^{ϖ_{m,n}} u_{m,n}` with `ϖ_{m,n} = e₁ + ⋯ + e_m` and
/// `u_{m,n}(i) ≡ i + m (mod n)`: the length-zero element of `t^{ϖ_{m,n}} S_n`.
pub fn superbasic_element(m: u64, n: u64) -> Result<ExtAffineElement> {
    if m == 0 || m >= n || gcd(m as i64, n as i64) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    Ok(length_zero_element(m as i64, n as usize))
}

/// The unique length-zero element of `GL_n` with Kottwitz invariant `k`.
pub fn length_zero_element(k: i64, n: usize) -> ExtAffineElement {
    let nn = n as i64;
    let quot = k.div_euclid(nn);
    let rem = k.rem_euclid(nn) as usize;
    let trans = (0..n).map(|i| quot + i64::from(i < rem)).collect();
    let images = (0..n).map(|i| (i + rem) % n).collect();
    ExtAffineElement::from_parts(trans, Permutation::from_zero_based(images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(t: &[i64], cycles: &[&[usize]]) -> ExtAffineElement {
        let n = t.len();
        let mut p = Permutation::identity(n);
        for c in cycles {
            p = p.compose(&Permutation::cycle(n, c).unwrap());
        }
        ExtAffineElement::new(t.to_vec(), p).unwrap()
    }

    #[test]
    fn compose_examples() {
        let a = el(&[1, 0], &[]);
        let b = el(&[0, 1], &[]);
        assert_eq!(&a * &b, el(&[1, 1], &[]));
        let s = el(&[0, 0], &[&[1, 2]]);
        assert_eq!(&s * &el(&[1, 0], &[]), el(&[0, 1], &[&[1, 2]]));
        let w = el(&[1, 0], &[&[1, 2]]);
        assert_eq!(&w * &w, el(&[1, 1], &[]));
        assert!(a.compose(&ExtAffineElement::identity(3)).is_err());
    }

    #[test]
    fn invert_examples() {
        assert!(ExtAffineElement::identity(4).inverse().is_identity());
        let w = el(&[1, 0], &[&[1, 2]]);
        assert_eq!(w.inverse(), el(&[0, -1], &[&[1, 2]]));
        assert!((&w * &w.inverse()).is_identity());
    }

    #[test]
    fn affine_action() {
        let v = vec![q(3), q(-2)];
        assert_eq!(ExtAffineElement::identity(2).apply_affine(&v).unwrap(), v);
        let t = el(&[1, 0], &[]);
        assert_eq!(t.apply_affine(&[q(0), q(0)]).unwrap(), vec![q(1), q(0)]);
        let s = superbasic_element(5, 8).unwrap();
        let img = s.apply_affine(&[q(0); 8]).unwrap();
        assert_eq!(img, crate::num::to_q(&[1, 1, 1, 1, 1, 0, 0, 0]));
    }

    #[test]
    fn superbasic_examples() {
        let s = superbasic_element(5, 8).unwrap();
        assert_eq!(s.trans(), &[1, 1, 1, 1, 1, 0, 0, 0]);
        let u = Permutation::cycle(8, &[6, 3, 8, 5, 2, 7, 4, 1]).unwrap();
        assert_eq!(s.perm(), &u);
        assert_eq!(superbasic_element(1, 2).unwrap(), el(&[1, 0], &[&[1, 2]]));
        assert!(superbasic_element(2, 4).is_err());
        assert!(superbasic_element(0, 3).is_err());
        assert!(superbasic_element(3, 3).is_err());
    }
}
