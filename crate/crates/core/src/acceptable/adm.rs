use std::collections::BTreeSet;

use super::{Guard, Problem};
use crate::num::Q;
use crate::weyl::{ExtAffineElement, GroupDatum, Permutation};
use crate::{Error, Result};

/// The first `x` (in orbit order, minimal length) with `w ≤ t^{x(μ)}`.
pub fn adm_member(datum: &GroupDatum, w: &ExtAffineElement, mu: &[i64]) -> Option<Permutation> {
    if datum.block_sums(w) != datum.block_sums(&ExtAffineElement::translation(mu)) {
        return None;
    }
    datum.orbit(mu).into_iter().find_map(|target| {
        datum
            .bruhat_leq(w, &ExtAffineElement::translation(&target))
            .then(|| datum.perm_sending(mu, &target).expect("orbit element"))
    })
}

/// `Adm(μ)`, sorted.
pub fn adm_enumerate(
    datum: &GroupDatum,
    mu: &[i64],
    guard: &Guard,
) -> Result<Vec<ExtAffineElement>> {
    datum.check_rank(mu.len())?;
    if datum.rank() > guard.adm_n {
        return Err(Error::GuardExceeded(format!(
            "rank {} exceeds adm_n = {}",
            datum.rank(),
            guard.adm_n
        )));
    }
    for b in 0..datum.num_blocks() {
        let r = datum.range(b);
        let spread = mu[r.clone()].iter().max().unwrap() - mu[r].iter().min().unwrap();
        if spread > guard.adm_entry {
            return Err(Error::GuardExceeded(format!(
                "entry spread {spread} exceeds adm_entry = {}",
                guard.adm_entry
            )));
        }
    }
    let mut all = BTreeSet::new();
    for target in datum.orbit(mu) {
        all.extend(datum.lower_interval(&ExtAffineElement::translation(&target)));
        if all.len() > guard.adm_size {
            return Err(Error::GuardExceeded(format!(
                "|Adm(mu)| exceeds adm_size = {}",
                guard.adm_size
            )));
        }
    }
    Ok(all.into_iter().collect())
}

/// Normalized Newton points of `Adm(μ)`, deduplicated.
pub fn adm_newton_points(problem: &Problem, guard: &Guard) -> Result<BTreeSet<Vec<Q>>> {
    adm_enumerate(problem.datum(), &problem.mu, guard)?
        .iter()
        .map(|w| problem.normalized_newton(w))
        .collect()
}
