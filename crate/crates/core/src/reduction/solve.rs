use std::fmt;
use std::str::FromStr;

use super::steps::{base_case, restrict_blocks};
use super::{
    adjoint_project, lift_witness, parabolic_reduce, product_split, verify_witness, BaseCase,
    ReductionTrace, Witness,
};
use crate::acceptable::{
    adm_enumerate, adm_member, enumerate_acceptable, maximal_newton_state, Guard, Problem,
};
use crate::newton::{dominance_leq, dominance_leq_vec, kappa, kappa_class, NewtonPoint};
use crate::num::{fmt_vec, Q};
use crate::weyl::{ExtAffineElement, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Constructive,
    Bruteforce,
    Auto,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constructive" => Ok(Strategy::Constructive),
            "bruteforce" => Ok(Strategy::Bruteforce),
            "auto" => Ok(Strategy::Auto),
            _ => Err(Error::Parse {
                text: s.to_string(),
                reason: "expected constructive, bruteforce or auto".into(),
            }),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Constructive => "constructive",
            Strategy::Bruteforce => "bruteforce",
            Strategy::Auto => "auto",
        })
    }
}

/// How the sub-problem at the end of a trace was solved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Leaf {
    Base(BaseCase),
    /// One node per `σ₀`-orbit of blocks (block indices of the adjoint problem).
    Orbits(Vec<(Vec<usize>, SolveNode)>),
    Levi(Box<SolveNode>),
}

/// A solved problem: the steps taken, how their last problem was solved, and
/// the lifted witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveNode {
    pub trace: ReductionTrace,
    pub leaf: Leaf,
    pub witness: Witness,
    /// The maximal point of `trace.problem`, GL coordinates.
    pub nu: Vec<Q>,
}

/// Runs the reductions on `problem` and lifts the base-case witnesses.
pub fn solve_node(problem: &Problem) -> Result<SolveNode> {
    let mut trace = ReductionTrace::new(problem.clone());
    let (adj, step) = adjoint_project(problem)?;
    trace.push(step);
    let orbits = adj.frob.sigma0().block_orbits();
    let (leaf, sub) = if orbits.len() > 1 {
        let datum = adj.datum();
        let n = datum.rank();
        let mut w = ExtAffineElement::identity(n);
        let mut x = Permutation::identity(n);
        let mut children = Vec::new();
        for mut blocks in orbits {
            blocks.sort_unstable();
            let node = solve_node(&restrict_blocks(&adj, &blocks)?)?;
            let coords = datum.coords(&blocks);
            w = &w * &node.witness.w.scatter(n, &coords);
            x = x.compose(&node.witness.x.scatter(n, &coords));
            children.push((blocks, node));
        }
        (Leaf::Orbits(children), Witness { w, x })
    } else {
        let (split, steps) = product_split(&adj)?;
        for s in steps {
            trace.push(s);
        }
        let (levi, step) = parabolic_reduce(&split)?;
        if levi.datum().num_blocks() == 1 {
            let (base, witness) = base_case(&split)?;
            (Leaf::Base(base), witness)
        } else {
            trace.push(step);
            let child = solve_node(&levi)?;
            let witness = child.witness.clone();
            (Leaf::Levi(Box::new(child)), witness)
        }
    };
    verify_witness(trace.last(), &sub)?;
    let witness = lift_witness(&trace, &sub)?;
    let nu = maximal_newton_state(problem)?.nu;
    Ok(SolveNode {
        trace,
        leaf,
        witness,
        nu,
    })
}

/// Exhaustive cross-check data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteCheck {
    pub adm_size: usize,
    pub distinct_points: usize,
    pub nu: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub strategy: Strategy,
    pub reduction: Option<SolveNode>,
    pub brute: Option<BruteCheck>,
    /// Size of the acceptable set checked against the maximum, when enumerated.
    pub acceptable_checked: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub nu: NewtonPoint,
    pub w: ExtAffineElement,
    pub x: Permutation,
    pub certificate: Certificate,
}

fn brute(problem: &Problem, guard: &Guard) -> Result<(Witness, BruteCheck)> {
    let datum = problem.datum();
    let adm = adm_enumerate(datum, &problem.mu, guard)?;
    let pts: Vec<Vec<Q>> = adm
        .iter()
        .map(|w| problem.normalized_newton(w))
        .collect::<Result<_>>()?;
    let mut distinct = pts.clone();
    distinct.sort();
    distinct.dedup();
    let max = distinct
        .iter()
        .find(|m| distinct.iter().all(|p| dominance_leq_vec(datum, p, m)))
        .cloned()
        .ok_or_else(|| Error::Verification("Adm(μ) has no unique maximal Newton point".into()))?;
    let k = pts
        .iter()
        .position(|p| *p == max)
        .expect("maximum is attained");
    let w = adm[k].clone();
    let x = adm_member(datum, &w, &problem.mu).expect("enumerated elements are admissible");
    Ok((
        Witness { w, x },
        BruteCheck {
            adm_size: adm.len(),
            distinct_points: distinct.len(),
            nu: max,
        },
    ))
}

/// The maximal element of `B(W̃, μ, σ)` with an admissible witness.
pub fn solve(problem: &Problem, strategy: Strategy, guard: &Guard) -> Result<Solution> {
    let (witness, reduction, brute_check) = match strategy {
        Strategy::Bruteforce => {
            let (w, b) = brute(problem, guard)?;
            (w, None, Some(b))
        }
        Strategy::Constructive => {
            let node = solve_node(problem)?;
            (node.witness.clone(), Some(node), None)
        }
        Strategy::Auto => {
            let node = solve_node(problem)?;
            let b = match brute(problem, guard) {
                Ok((_, b)) => Some(b),
                Err(Error::GuardExceeded(_)) => None,
                Err(e) => return Err(e),
            };
            if let Some(b) = &b {
                if b.nu != node.nu {
                    return Err(Error::Verification(format!(
                        "constructive maximum {} differs from the exhaustive {}",
                        fmt_vec(&node.nu),
                        fmt_vec(&b.nu)
                    )));
                }
            }
            (node.witness.clone(), Some(node), b)
        }
    };

    let datum = problem.datum();
    let w = witness.w;
    adm_member(datum, &w, &problem.mu)
        .ok_or_else(|| Error::Verification(format!("{w} is not in Adm(μ)")))?;
    let bound = ExtAffineElement::translation(&witness.x.act(&problem.mu));
    if !datum.bruhat_leq(&w, &bound) {
        return Err(Error::Verification(format!("{w} is not below {bound}")));
    }
    if kappa_class(&problem.frob, &kappa(datum, &w)) != problem.kappa() {
        return Err(Error::Verification(format!("κ({w}) differs from κ(t^μ)")));
    }
    let nu_gl = problem.normalized_newton(&w)?;
    let max = maximal_newton_state(problem)?.nu;
    if nu_gl != max {
        return Err(Error::Verification(format!(
            "witness point {} differs from the maximal point {}",
            fmt_vec(&nu_gl),
            fmt_vec(&max)
        )));
    }
    let nu = problem.point(&nu_gl);
    let acceptable_checked = match enumerate_acceptable(problem, guard) {
        Ok(set) => {
            for p in &set.points {
                if !dominance_leq(p, &nu)? {
                    return Err(Error::Verification(format!(
                        "acceptable point {p} is not below {nu}"
                    )));
                }
            }
            Some(set.points.len())
        }
        Err(Error::GuardExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Solution {
        nu,
        w,
        x: witness.x,
        certificate: Certificate {
            strategy,
            reduction,
            brute: brute_check,
            acceptable_checked,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::{DiagramAutomorphism, FrobeniusDescriptor};
    use crate::num::gcd;
    use crate::weyl::{length_zero_element, GroupDatum};

    fn dominant(n: usize, top: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    let hi = v.last().copied().unwrap_or(top);
                    (0..=hi).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn check(problem: &Problem) {
        let s = solve(problem, Strategy::Auto, &Guard::default())
            .unwrap_or_else(|e| panic!("μ = {:?}, σ = {}: {e}", problem.mu, problem.frob));
        assert!(s.certificate.reduction.is_some());
    }

    #[test]
    fn superbasic_sweep() {
        for n in 2..=4u64 {
            for m in 1..n {
                if gcd(m as i64, n as i64) != 1 {
                    continue;
                }
                for mu in dominant(n as usize, 2) {
                    check(
                        &Problem::new(mu, FrobeniusDescriptor::superbasic(m, n).unwrap()).unwrap(),
                    );
                }
            }
        }
    }

    #[test]
    fn inner_twists_of_every_kappa() {
        for n in 2..=4usize {
            for k in 0..n as i64 {
                let tau = length_zero_element(k, n);
                for mu in dominant(n, 2) {
                    check(
                        &Problem::new(
                            mu,
                            FrobeniusDescriptor::inner(GroupDatum::gl(n), tau.clone()).unwrap(),
                        )
                        .unwrap(),
                    );
                    let frob = FrobeniusDescriptor::inner(GroupDatum::pgl(n), tau.clone()).unwrap();
                    check(&Problem::new(dominant(n, 2)[0].clone(), frob).unwrap());
                }
            }
        }
    }

    #[test]
    fn flips_and_swaps() {
        for n in 2..=4usize {
            let g = GroupDatum::gl(n);
            for k in 0..n as i64 {
                let tau = length_zero_element(k, n);
                let frob = FrobeniusDescriptor::new(
                    g.clone(),
                    tau,
                    DiagramAutomorphism::flip(&g),
                    vec![crate::num::q(0); n],
                );
                let Ok(frob) = frob else { continue };
                for mu in dominant(n, 2) {
                    check(&Problem::new(mu, frob.clone()).unwrap());
                }
            }
        }
        let g = GroupDatum::gl_blocks(&[2, 2]).unwrap();
        for (k1, k2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let mut t = length_zero_element(k1, 2).trans().to_vec();
            t.extend(length_zero_element(k2, 2).trans());
            let mut p = length_zero_element(k1, 2).perm().images_one_based();
            p.extend(
                length_zero_element(k2, 2)
                    .perm()
                    .images_one_based()
                    .iter()
                    .map(|x| x + 2),
            );
            let tau = ExtAffineElement::new(t, Permutation::from_images(&p).unwrap()).unwrap();
            for flips in [vec![false, false], vec![true, false], vec![true, true]] {
                let s0 = DiagramAutomorphism::new(&g, vec![1, 0], flips).unwrap();
                let frob =
                    FrobeniusDescriptor::new(g.clone(), tau.clone(), s0, vec![crate::num::q(0); 4])
                        .unwrap();
                for mu in [[1, 0, 0, 0], [1, 0, 1, 0], [2, 0, 1, 1], [2, 1, 0, 0]] {
                    check(&Problem::new(mu.to_vec(), frob.clone()).unwrap());
                }
            }
        }
    }
}
