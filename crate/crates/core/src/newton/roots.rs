//! Simple roots, fundamental weights and their `σ₀`-orbits.
//!
//! The simple root `k` is `α_k = e_k − e_{k+1}` (0-based) for `k`, `k+1` in
//! the same block.

use std::collections::BTreeSet;

use super::FrobeniusDescriptor;
use crate::num::{q, Q};
use crate::weyl::GroupDatum;

pub fn simple_roots(datum: &GroupDatum) -> Vec<usize> {
    (0..datum.rank().saturating_sub(1))
        .filter(|&k| datum.block_of(k) == datum.block_of(k + 1))
        .collect()
}

pub fn root_pairing(k: usize, v: &[Q]) -> Q {
    v[k] - v[k + 1]
}

pub fn coroot(n: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[k] = 1;
    v[k + 1] = -1;
    v
}

/// `⟨ω_k, v⟩ = Σ_{j≤i} v_j − (i/n_b) Σ_b v` in block-local coordinates.
pub fn fundamental_pairing(datum: &GroupDatum, k: usize, v: &[Q]) -> Q {
    let b = datum.block_of(k);
    let r = datum.range(b);
    let i = k + 1 - r.start;
    let partial: Q = v[r.start..=k].iter().sum();
    let total: Q = v[r.clone()].iter().sum();
    partial - total * Q::new(i as i64, r.len() as i64)
}

/// `⟨ω_c, v⟩ = Σ_{k∈c} ⟨ω_k, v⟩`.
pub fn orbit_pairing(datum: &GroupDatum, c: &[usize], v: &[Q]) -> Q {
    c.iter().map(|&k| fundamental_pairing(datum, k, v)).sum()
}

/// `I(v) = {k : ⟨α_k, v⟩ ≠ 0}`.
pub fn support(datum: &GroupDatum, v: &[Q]) -> BTreeSet<usize> {
    simple_roots(datum)
        .into_iter()
        .filter(|&k| v[k] != v[k + 1])
        .collect()
}

pub fn root_image(frob: &FrobeniusDescriptor, k: usize) -> usize {
    let s = frob.sigma0_linear();
    s.perm.at(k).min(s.perm.at(k + 1))
}

/// `σ₀`-orbits on the simple roots, each sorted, listed by least element.
pub fn root_orbits(frob: &FrobeniusDescriptor) -> Vec<Vec<usize>> {
    let roots = simple_roots(frob.datum());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &k in &roots {
        if seen.contains(&k) {
            continue;
        }
        let mut orbit = vec![k];
        seen.insert(k);
        let mut cur = root_image(frob, k);
        while cur != k {
            seen.insert(cur);
            orbit.push(cur);
            cur = root_image(frob, cur);
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Orbits contained in `set` (which must be `σ₀`-stable).
pub fn orbits_within(frob: &FrobeniusDescriptor, set: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    root_orbits(frob)
        .into_iter()
        .filter(|c| c.iter().all(|k| set.contains(k)))
        .collect()
}

/// The vector `Σ_b c_b d_b^∨` with `c_b` the average of `v` on block `b`.
pub fn block_center(datum: &GroupDatum, v: &[Q]) -> Vec<Q> {
    let mut c = vec![q(0); v.len()];
    for b in 0..datum.num_blocks() {
        let r = datum.range(b);
        let avg = v[r.clone()].iter().sum::<Q>() / q(r.len() as i64);
        for x in &mut c[r] {
            *x = avg;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::DiagramAutomorphism;
    use crate::num::{frac, to_q};
    use crate::weyl::ExtAffineElement;

    #[test]
    fn pairings_kill_the_centre() {
        let g = GroupDatum::gl(4);
        for k in simple_roots(&g) {
            assert_eq!(fundamental_pairing(&g, k, &to_q(&[1, 1, 1, 1])), q(0));
            for j in simple_roots(&g) {
                let expect = if j == k { q(1) } else { q(0) };
                assert_eq!(fundamental_pairing(&g, k, &to_q(&coroot(4, j))), expect);
            }
        }
        assert_eq!(fundamental_pairing(&g, 0, &to_q(&[1, 0, 0, 0])), frac(3, 4));
    }

    #[test]
    fn flip_orbits() {
        let g = GroupDatum::gl(4);
        let f = FrobeniusDescriptor::new(
            g.clone(),
            ExtAffineElement::identity(4),
            DiagramAutomorphism::flip(&g),
            vec![q(0); 4],
        )
        .unwrap();
        assert_eq!(root_orbits(&f), vec![vec![0, 2], vec![1]]);
        let g = GroupDatum::gl_blocks(&[3, 3]).unwrap();
        let f = FrobeniusDescriptor::new(
            g.clone(),
            ExtAffineElement::identity(6),
            DiagramAutomorphism::parse(&g, "2,1").unwrap(),
            vec![q(0); 6],
        )
        .unwrap();
        assert_eq!(root_orbits(&f), vec![vec![0, 3], vec![1, 4]]);
    }
}
