use std::collections::BTreeSet;

use super::{center_of, same_center, Problem};
use crate::newton::roots::{coroot, orbit_pairing, orbits_within, root_orbits, support};
use crate::num::{fmt_vec, Q};
use crate::weyl::{ExtAffineElement, Permutation};
use crate::{Error, Result};

fn check_point(problem: &Problem, v: &[Q]) -> Result<()> {
    let datum = problem.datum();
    datum.check_rank(v.len())?;
    if !datum.is_dominant(v) {
        return Err(Error::NotDominant(fmt_vec(v)));
    }
    if !problem.frob.is_invariant(v) {
        return Err(Error::NotInvariant(fmt_vec(v)));
    }
    Ok(())
}

/// `⟨ω_c, μ^◇ + λ^◇ − v⟩ ∈ ℤ` for every `σ₀`-orbit `c ⊆ I(v)`, and the central
/// part of `v` equal to that of `μ^◇`.
pub fn newton_criterion(v: &[Q], problem: &Problem) -> Result<bool> {
    check_point(problem, v)?;
    let datum = problem.datum();
    if !same_center(datum, v, &center_of(problem)) {
        return Ok(false);
    }
    let target: Vec<Q> = problem
        .mu_diamond()
        .iter()
        .zip(problem.lambda_diamond())
        .zip(v)
        .map(|((m, l), x)| m + l - x)
        .collect();
    let i_v = support(datum, v);
    Ok(orbits_within(&problem.frob, &i_v)
        .iter()
        .all(|c| orbit_pairing(datum, c, &target).is_integer()))
}

/// `w = t^β x τ⁻¹` with `β = μ + λ − Σ_c a_c α^∨_{i_c}` and `x` the product of
/// the least representatives of the `σ₀`-orbits of `J(v)`, ascending.
pub fn newton_witness(v: &[Q], problem: &Problem) -> Result<ExtAffineElement> {
    if !newton_criterion(v, problem)? {
        return Err(Error::CriterionFails(fmt_vec(v)));
    }
    let datum = problem.datum();
    let n = datum.rank();
    let i_v: BTreeSet<usize> = support(datum, v);
    let target: Vec<Q> = problem
        .mu_diamond()
        .iter()
        .zip(problem.lambda_diamond())
        .zip(v)
        .map(|((m, l), x)| m + l - x)
        .collect();
    let mut beta: Vec<i64> = problem
        .mu
        .iter()
        .zip(problem.frob.lambda())
        .map(|(a, b)| a + b)
        .collect();
    let mut x = Permutation::identity(n);
    for c in root_orbits(&problem.frob) {
        let rep = c[0];
        if c.iter().all(|k| i_v.contains(k)) {
            let a = orbit_pairing(datum, &c, &target).to_integer();
            for (b, d) in beta.iter_mut().zip(coroot(n, rep)) {
                *b -= a * d;
            }
        } else {
            x = x.compose(&Permutation::transposition(n, rep + 1, rep + 2));
        }
    }
    let w = &ExtAffineElement::new(beta, x)? * &problem.frob.tau().inverse();
    let got = problem.normalized_newton(&w)?;
    if got != v {
        return Err(Error::Verification(format!(
            "witness {w} has newton point {} instead of {}",
            fmt_vec(&got),
            fmt_vec(v)
        )));
    }
    Ok(w)
}

/// `μ^◇` is acceptable iff `⟨ω_c, λ^◇⟩ ∈ ℤ` for every orbit `c ⊆ I(μ^◇)`.
pub fn mu_diamond_acceptable(problem: &Problem) -> bool {
    let datum = problem.datum();
    let lam = problem.lambda_diamond();
    let i_mu = support(datum, &problem.mu_diamond());
    orbits_within(&problem.frob, &i_mu)
        .iter()
        .all(|c| orbit_pairing(datum, c, &lam).is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::FrobeniusDescriptor;
    use crate::num::{frac, q, to_q};
    use crate::weyl::{superbasic_element, GroupDatum};

    fn pgl2(mu: Vec<i64>) -> Problem {
        let f = FrobeniusDescriptor::inner(GroupDatum::pgl(2), superbasic_element(1, 2).unwrap())
            .unwrap();
        Problem::new(mu, f).unwrap()
    }

    #[test]
    fn pgl2_examples() {
        let p = pgl2(vec![1, 0]);
        let basic = vec![frac(1, 2), frac(1, 2)];
        assert!(newton_criterion(&basic, &p).unwrap());
        assert!(!newton_criterion(&to_q(&[1, 0]), &p).unwrap());
        assert!(!mu_diamond_acceptable(&p));
        let w = newton_witness(&basic, &p).unwrap();
        assert_eq!(
            crate::newton::kappa(p.datum(), &w),
            crate::newton::kappa(p.datum(), &p.t_mu())
        );

        let p = pgl2(vec![2, 0]);
        // ⟨ω₁, v⟩ = 1/2
        let v = vec![frac(3, 2), frac(1, 2)];
        assert!(newton_criterion(&v, &p).unwrap());
        newton_witness(&v, &p).unwrap();
        assert!(!newton_criterion(&to_q(&[2, 0]), &p).unwrap());
    }

    #[test]
    fn quasi_split_witness_is_translation() {
        let f = FrobeniusDescriptor::trivial(GroupDatum::gl(3));
        let p = Problem::new(vec![2, 1, 0], f).unwrap();
        assert!(mu_diamond_acceptable(&p));
        let w = newton_witness(&to_q(&[2, 1, 0]), &p).unwrap();
        assert_eq!(w, ExtAffineElement::translation(&[2, 1, 0]));
    }

    #[test]
    fn rejects_bad_points() {
        let p = pgl2(vec![1, 0]);
        assert!(matches!(
            newton_criterion(&[q(0), q(1)], &p),
            Err(Error::NotDominant(_))
        ));
        let f = FrobeniusDescriptor::superbasic(1, 3).unwrap();
        let p = Problem::new(vec![1, 0, 0], f).unwrap();
        let basic = vec![frac(1, 3); 3];
        assert!(newton_criterion(&basic, &p).unwrap());
        newton_witness(&basic, &p).unwrap();
        assert!(!newton_criterion(&[q(1), q(1), q(1)], &p).unwrap());
    }
}
