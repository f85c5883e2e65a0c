//! Integer segments on index intervals and their Newton polygons.

use std::fmt;

use crate::num::{q, Q};

/// `η ∈ ℤ^{[head, tail]}`; indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub head: usize,
    pub values: Vec<i64>,
}

impl Segment {
    pub fn new(head: usize, values: Vec<i64>) -> Self {
        Self { head, values }
    }

    /// `v` on `[1, v.len()]`.
    pub fn whole(v: &[i64]) -> Self {
        Self::new(1, v.to_vec())
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `head + size − 1`; for an empty segment this is `head − 1`.
    pub fn tail(&self) -> usize {
        self.head + self.values.len() - 1
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn av(&self) -> Option<Q> {
        (!self.is_empty()).then(|| Q::new(self.sum(), self.size() as i64))
    }

    pub fn at(&self, i: usize) -> i64 {
        self.values[i - self.head]
    }

    /// Restriction to `[from, to]`, both inside the segment.
    pub fn sub(&self, from: usize, to: usize) -> Self {
        assert!(
            from >= self.head && to <= self.tail() && from <= to + 1,
            "bad subsegment"
        );
        Self::new(
            from,
            self.values[from - self.head..=to - self.head].to_vec(),
        )
    }

    /// `η ∨ θ` with `h(θ) = t(η) + 1`.
    pub fn join(&self, other: &Self) -> Self {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        assert_eq!(self.tail() + 1, other.head, "segments are not adjacent");
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Self::new(self.head, values)
    }

    /// `η[k](i) = η(i + k)`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new((self.head as i64 - k) as usize, self.values.clone())
    }

    /// Maximal average among subsegments with the same head, and minimal
    /// among those with the same tail, both taken inside `ambient`.
    pub fn is_sharp_in(&self, ambient: &Segment) -> bool {
        let Some(av) = self.av() else { return false };
        let same_head =
            (self.head..=ambient.tail()).all(|t| ambient.sub(self.head, t).av().unwrap() <= av);
        let same_tail =
            (ambient.head..=self.tail()).all(|h| ambient.sub(h, self.tail()).av().unwrap() >= av);
        same_head && same_tail
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "({})@{}", parts.join(","), self.head)
    }
}

/// Hull data of the partial-sum polygon of a segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonData {
    /// Hull vertices `(k, |η|_{[h, h+k−1]}|)` starting at `(0, 0)`.
    pub vertices: Vec<(usize, Q)>,
    /// `sl(Con(η))`.
    pub slopes: Vec<Q>,
    /// The sharp decomposition realising the hull.
    pub pieces: Vec<Segment>,
}

impl PolygonData {
    /// Hull value at every integer abscissa `0..=size`.
    pub fn hull_values(&self) -> Vec<Q> {
        let mut out = vec![q(0)];
        let mut acc = q(0);
        for s in &self.slopes {
            acc += s;
            out.push(acc);
        }
        out
    }
}

/// Greedy sharp decomposition: repeatedly the longest prefix of maximal
/// average.
pub fn polygon(eta: &Segment) -> PolygonData {
    let mut vertices = vec![(0, q(0))];
    let mut slopes = Vec::new();
    let mut pieces = Vec::new();
    let mut start = 0;
    let mut total = q(0);
    let n = eta.size();
    while start < n {
        let mut best_len = 1;
        let mut best_av = q(eta.values[start]);
        let mut acc = 0i64;
        for len in 1..=n - start {
            acc += eta.values[start + len - 1];
            let av = Q::new(acc, len as i64);
            if av >= best_av {
                best_av = av;
                best_len = len;
            }
        }
        pieces.push(eta.sub(eta.head + start, eta.head + start + best_len - 1));
        slopes.extend(std::iter::repeat_n(best_av, best_len));
        total += best_av * q(best_len as i64);
        start += best_len;
        vertices.push((start, total));
    }
    PolygonData {
        vertices,
        slopes,
        pieces,
    }
}
