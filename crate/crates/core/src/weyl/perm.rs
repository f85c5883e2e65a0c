//! Permutations of `{1, …, n}` with the convention `(uv)(i) = u(v(i))`.

use std::fmt;

use crate::{Error, Result};

/// A bijection of `{1, …, n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from 1-based images `[u(1), …, u(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[img - 1] = true;
            out.push(img - 1);
        }
        Ok(Self { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Self { images }
    }

    /// The cycle `i₁ ↦ i₂ ↦ ⋯ ↦ i_k ↦ i₁` (1-based) in `S_n`.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for &p in points {
            if p == 0 || p > n {
                return Err(Error::Invalid(format!(
                    "cycle index {p} out of range 1..={n}"
                )));
            }
            if seen[p - 1] {
                return Err(Error::Invalid(format!("index {p} repeated in cycle")));
            }
            seen[p - 1] = true;
        }
        for (k, &p) in points.iter().enumerate() {
            let next = points[(k + 1) % points.len()];
            images[p - 1] = next - 1;
        }
        Ok(Self { images })
    }

    /// Transposition of two 1-based points (identity when they coincide).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 1-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Self {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// Action on coordinate vectors through `u(e_i) = e_{u(i)}`, so that
    /// `u(v)[u(i)] = v[i]`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            v.len(),
            self.len(),
            "vector length differs from permutation size"
        );
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }

    /// Number of inversions, i.e. the Coxeter length in `S_n`.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Nontrivial cycles (1-based), each starting at its least element,
    /// sorted by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }

    /// The permutation induced on the stable set `coords` (0-based).
    pub(crate) fn gather(&self, coords: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.len()];
        for (k, &i) in coords.iter().enumerate() {
            pos[i] = k;
        }
        let images = coords
            .iter()
            .map(|&i| pos[self.images[i]])
            .collect::<Vec<_>>();
        assert!(
            images.iter().all(|&k| k != usize::MAX),
            "coordinate set is not stable"
        );
        Self { images }
    }

    /// Places `self` on `coords` inside `S_n`.
    pub(crate) fn scatter(&self, n: usize, coords: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &i) in coords.iter().enumerate() {
            images[i] = coords[self.images[k]];
        }
        Self { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("cyc({})", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
