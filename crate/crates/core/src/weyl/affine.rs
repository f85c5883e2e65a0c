//! Signed permutation matrices and integral affine maps of `ℚ^n`.
//!
//! These carry the twisted actions `wσ` where `σ₀` may negate and reverse
//! blocks; elements of `W̃` are the special case with all signs positive.

use super::element::ExtAffineElement;
use super::perm::Permutation;
use crate::num::{q, Q};

/// `x ↦ y` with `y[p(i)] = sign[i] · x[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Permutation,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: Permutation::identity(n),
            signs: vec![1; n],
        }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        let n = perm.len();
        Self {
            perm,
            signs: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.signs.iter().all(|&s| s == 1)
    }

    pub fn is_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn compose(&self, other: &Self) -> Self {
        let n = self.len();
        let mut images = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm.at(i);
            images[i] = self.perm.at(j);
            signs[i] = other.signs[i] * self.signs[j];
        }
        Self {
            perm: Permutation::from_zero_based(images),
            signs,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.len();
        let inv = self.perm.inverse();
        let signs = (0..n).map(|j| self.signs[inv.at(j)]).collect();
        Self { perm: inv, signs }
    }

    pub fn apply_i64(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (i, &v) in x.iter().enumerate() {
            out[self.perm.at(i)] = i64::from(self.signs[i]) * v;
        }
        out
    }

    pub fn apply_q(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![q(0); x.len()];
        for (i, &v) in x.iter().enumerate() {
            out[self.perm.at(i)] = q(i64::from(self.signs[i])) * v;
        }
        out
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// Basis of `ker(self − 1)`: one vector per cycle whose signs multiply to `+1`.
    pub fn fixed_space_basis(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut basis = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut v = vec![0i64; n];
            let mut i = start;
            let mut val = 1i64;
            let consistent = loop {
                seen[i] = true;
                v[i] = val;
                let j = self.perm.at(i);
                let next = val * i64::from(self.signs[i]);
                if j == start {
                    break next == v[start];
                }
                val = next;
                i = j;
            };
            if consistent {
                basis.push(v);
            }
        }
        basis
    }
}

/// `x ↦ L x + shift`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: SignedPerm,
    pub shift: Vec<i64>,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        Self {
            linear: SignedPerm::identity(n),
            shift: vec![0; n],
        }
    }

    pub fn linear(l: SignedPerm) -> Self {
        let n = l.len();
        Self {
            linear: l,
            shift: vec![0; n],
        }
    }

    pub fn from_element(w: &ExtAffineElement) -> Self {
        Self {
            linear: SignedPerm::from_perm(w.perm().clone()),
            shift: w.trans().to_vec(),
        }
    }

    /// Back to `W̃` when the linear part is an honest permutation.
    pub fn to_element(&self) -> Option<ExtAffineElement> {
        self.linear
            .is_positive()
            .then(|| ExtAffineElement::from_parts(self.shift.clone(), self.linear.perm.clone()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let moved = self.linear.apply_i64(&other.shift);
        Self {
            linear: self.linear.compose(&other.linear),
            shift: moved.iter().zip(&self.shift).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.linear.inverse();
        let shift = inv.apply_i64(&self.shift).into_iter().map(|x| -x).collect();
        Self { linear: inv, shift }
    }

    pub fn conjugate(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        self.linear
            .apply_q(x)
            .into_iter()
            .zip(&self.shift)
            .map(|(a, &b)| a + q(b))
            .collect()
    }
}
