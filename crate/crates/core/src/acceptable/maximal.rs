use std::collections::{BTreeMap, BTreeSet};

use super::{center_of, newton_criterion, Problem};
use crate::newton::roots::{
    fundamental_pairing, orbit_pairing, root_pairing, simple_roots, support,
};
use crate::newton::{dominance_leq_vec, NewtonPoint};
use crate::num::{fmt_vec, max_in_coset_below, q, Q};
use crate::{Error, Result};

/// Data of the construction of the maximal point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSolverState {
    /// `⟨ω_k, e_k⟩` for every simple root `k`.
    pub e: BTreeMap<usize, Q>,
    /// `I(E)`: roots kept after the reduction loop.
    pub support: BTreeSet<usize>,
    /// The solution in GL coordinates.
    pub nu: Vec<Q>,
    pub iterations: usize,
}

const MAX_ITERATIONS: usize = 10_000;

pub fn maximal_newton_state(problem: &Problem) -> Result<MaximalSolverState> {
    let datum = problem.datum();
    let mu_d = problem.mu_diamond();
    let sum: Vec<Q> = mu_d
        .iter()
        .zip(problem.lambda_diamond())
        .map(|(a, b)| a + b)
        .collect();
    let center = center_of(problem);

    let mut e = BTreeMap::new();
    for c in problem.orbits() {
        let bound = orbit_pairing(datum, &c, &mu_d);
        let t = max_in_coset_below(orbit_pairing(datum, &c, &sum), bound).max(q(0));
        for &k in &c {
            e.insert(k, t / q(c.len() as i64));
        }
    }

    let mut active: BTreeSet<usize> = e
        .iter()
        .filter(|(_, t)| **t > q(0))
        .map(|(k, _)| *k)
        .collect();
    let mut iterations = 0;
    let nu = loop {
        iterations += 1;
        if iterations > MAX_ITERATIONS {
            return Err(Error::Verification(
                "maximal point reduction did not settle".into(),
            ));
        }
        let pairings: BTreeMap<usize, Q> = active.iter().map(|&k| (k, e[&k])).collect();
        let v = problem.interpolate(&pairings, &center);
        let violators: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&k| root_pairing(k, &v) <= q(0))
            .collect();
        if !violators.is_empty() {
            for k in violators {
                active.remove(&k);
            }
            continue;
        }
        let missing: Vec<usize> = simple_roots(datum)
            .into_iter()
            .filter(|k| !active.contains(k) && fundamental_pairing(datum, *k, &v) < e[k])
            .collect();
        if !missing.is_empty() {
            active.extend(missing);
            continue;
        }
        break v;
    };

    let fail = |what: &str| {
        Err(Error::Verification(format!(
            "maximal point {}: {what}",
            fmt_vec(&nu)
        )))
    };
    if !datum.is_dominant(&nu) {
        return fail("not dominant");
    }
    if !problem.frob.is_invariant(&nu) {
        return fail("not invariant");
    }
    if support(datum, &nu) != active {
        return fail("support differs from I(E)");
    }
    if !dominance_leq_vec(datum, &nu, &mu_d) {
        return fail("not below the diamond of mu");
    }
    if e.iter()
        .any(|(&k, t)| fundamental_pairing(datum, k, &nu) < *t)
    {
        return fail("below some e_i");
    }
    if !newton_criterion(&nu, problem)? {
        return fail("criterion fails");
    }
    Ok(MaximalSolverState {
        e,
        support: active,
        nu,
        iterations,
    })
}

/// The unique maximal element of `B(W̃, μ, σ)`.
pub fn maximal_newton(problem: &Problem) -> Result<NewtonPoint> {
    Ok(problem.point(&maximal_newton_state(problem)?.nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acceptable::{mu_diamond_acceptable, Problem};
    use crate::newton::FrobeniusDescriptor;
    use crate::num::{frac, to_q};
    use crate::weyl::{superbasic_element, GroupDatum};

    #[test]
    fn pgl2_examples() {
        let f = FrobeniusDescriptor::inner(GroupDatum::pgl(2), superbasic_element(1, 2).unwrap())
            .unwrap();
        let p = Problem::new(vec![1, 0], f.clone()).unwrap();
        let s = maximal_newton_state(&p).unwrap();
        assert_eq!(s.e[&0], q(0));
        assert_eq!(maximal_newton(&p).unwrap().nu, vec![q(0), q(0)]);
        let p = Problem::new(vec![2, 0], f).unwrap();
        let s = maximal_newton_state(&p).unwrap();
        assert_eq!(fundamental_pairing(p.datum(), 0, &s.nu), frac(1, 2));
        assert_eq!(
            maximal_newton(&p).unwrap().nu,
            vec![frac(1, 2), frac(-1, 2)]
        );
    }

    #[test]
    fn quasi_split_is_mu() {
        let f = FrobeniusDescriptor::trivial(GroupDatum::gl(4));
        let p = Problem::new(vec![3, 1, 1, 0], f).unwrap();
        assert!(mu_diamond_acceptable(&p));
        assert_eq!(maximal_newton(&p).unwrap().nu, to_q(&[3, 1, 1, 0]));
    }

    #[test]
    fn gl8_example_maximum() {
        let f = FrobeniusDescriptor::superbasic(5, 8).unwrap();
        let p = Problem::new(vec![1, 1, 1, 0, 0, 0, 0, 0], f).unwrap();
        let nu = maximal_newton(&p).unwrap();
        let shift = frac(5, 8);
        let expect: Vec<Q> = [
            frac(3, 2),
            frac(3, 2),
            q(1),
            q(1),
            q(1),
            frac(2, 3),
            frac(2, 3),
            frac(2, 3),
        ]
        .iter()
        .map(|x| x - shift)
        .collect();
        assert_eq!(nu.nu, expect);
        assert!(!mu_diamond_acceptable(&p));
    }
}
