use std::collections::{BTreeMap, BTreeSet};

use super::{center_of, Guard, Problem};
use crate::newton::roots::{orbit_pairing, support};
use crate::newton::{dominance_leq_vec, NewtonPoint};
use crate::num::{q, Q};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptableSet {
    /// Sorted lexicographically decreasing.
    pub points: Vec<NewtonPoint>,
    /// `(i, j)`: `points[i]` is covered by `points[j]`.
    pub hasse: Vec<(usize, usize)>,
    pub max: usize,
}

impl AcceptableSet {
    pub fn maximum(&self) -> &NewtonPoint {
        &self.points[self.max]
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.points.iter().any(|p| p.nu == v)
    }
}

/// Elements of `offset + ℤ` in `[0, bound]`.
fn coset_values(offset: Q, bound: Q) -> Vec<Q> {
    let mut out = Vec::new();
    if bound < q(0) {
        return out;
    }
    let mut t = offset - offset.floor();
    while t <= bound {
        out.push(t);
        t += q(1);
    }
    out
}

/// All `v ≤ μ^◇` satisfying the criterion, grouped by the `σ₀`-stable support.
pub(crate) fn acceptable_points(problem: &Problem) -> Vec<Vec<Q>> {
    let datum = problem.datum();
    let mu_d = problem.mu_diamond();
    let sum: Vec<Q> = mu_d
        .iter()
        .zip(problem.lambda_diamond())
        .map(|(a, b)| a + b)
        .collect();
    let center = center_of(problem);
    let orbits = problem.orbits();
    let mut found = BTreeSet::new();
    for mask in 0u64..(1u64 << orbits.len()) {
        let chosen: Vec<&Vec<usize>> = orbits
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c)
            .collect();
        let support_set: BTreeSet<usize> = chosen.iter().flat_map(|c| c.iter().copied()).collect();
        let ranges: Vec<Vec<Q>> = chosen
            .iter()
            .map(|c| {
                coset_values(
                    orbit_pairing(datum, c, &sum),
                    orbit_pairing(datum, c, &mu_d),
                )
            })
            .collect();
        let mut idx = vec![0usize; chosen.len()];
        if ranges.iter().any(Vec::is_empty) {
            continue;
        }
        loop {
            let mut pairings = BTreeMap::new();
            for (c, (vals, &i)) in chosen.iter().zip(ranges.iter().zip(&idx)) {
                let each = vals[i] / q(c.len() as i64);
                for &k in c.iter() {
                    pairings.insert(k, each);
                }
            }
            let v = problem.interpolate(&pairings, &center);
            if datum.is_dominant(&v)
                && support(datum, &v) == support_set
                && problem.frob.is_invariant(&v)
                && dominance_leq_vec(datum, &v, &mu_d)
            {
                found.insert(v);
            }
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < ranges[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    found.into_iter().rev().collect()
}

/// `B(W̃, μ, σ)` with its covering relations and unique maximum.
pub fn enumerate_acceptable(problem: &Problem, guard: &Guard) -> Result<AcceptableSet> {
    let datum = problem.datum();
    if datum.rank() > guard.acceptable_n {
        return Err(Error::GuardExceeded(format!(
            "rank {} exceeds acceptable_n = {}",
            datum.rank(),
            guard.acceptable_n
        )));
    }
    let raw = acceptable_points(problem);
    let k = raw.len();
    let leq = |i: usize, j: usize| dominance_leq_vec(datum, &raw[i], &raw[j]);
    let mut hasse = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || !leq(i, j) {
                continue;
            }
            let covered = (0..k).any(|m| m != i && m != j && leq(i, m) && leq(m, j));
            if !covered {
                hasse.push((i, j));
            }
        }
    }
    let maxima: Vec<usize> = (0..k).filter(|&j| (0..k).all(|i| leq(i, j))).collect();
    if maxima.len() != 1 {
        return Err(Error::Verification(format!(
            "acceptable set has {} maxima among {k} points",
            maxima.len()
        )));
    }
    Ok(AcceptableSet {
        points: raw.iter().map(|v| problem.point(v)).collect(),
        hasse,
        max: maxima[0],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::FrobeniusDescriptor;
    use crate::num::{frac, to_q};

    #[test]
    fn gl2_examples() {
        let f = FrobeniusDescriptor::superbasic(1, 2).unwrap();
        let p = Problem::new(vec![2, 0], f.clone()).unwrap();
        let s = enumerate_acceptable(&p, &Guard::default()).unwrap();
        let pts: Vec<Vec<Q>> = s.points.iter().map(|p| p.nu.clone()).collect();
        assert_eq!(pts, vec![vec![frac(3, 2), frac(1, 2)], to_q(&[1, 1])]);
        assert_eq!(s.maximum().nu, vec![frac(3, 2), frac(1, 2)]);
        assert_eq!(s.hasse, vec![(1, 0)]);

        let p = Problem::new(vec![1, 0], f).unwrap();
        let s = enumerate_acceptable(&p, &Guard::default()).unwrap();
        assert_eq!(s.points.len(), 1);
        assert_eq!(s.points[0].nu, vec![frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn zero_mu_is_basic() {
        let f = FrobeniusDescriptor::superbasic(2, 5).unwrap();
        let p = Problem::new(vec![0; 5], f).unwrap();
        let s = enumerate_acceptable(&p, &Guard::default()).unwrap();
        assert_eq!(s.points.len(), 1);
        assert_eq!(s.points[0].nu, vec![q(0); 5]);
    }

    #[test]
    fn guard_applies() {
        let f = FrobeniusDescriptor::superbasic(1, 9).unwrap();
        let p = Problem::new(vec![0; 9], f).unwrap();
        assert!(matches!(
            enumerate_acceptable(&p, &Guard::default()),
            Err(Error::GuardExceeded(_))
        ));
    }
}
