//! Reductions to the superbasic case and back.
//!
//! A problem is first moved to the adjoint group, split along the `σ₀`-orbits
//! of its blocks, reduced to a single block by the product step, and then to a
//! Levi subgroup on which `σ` is superbasic. Witnesses are lifted back through
//! the recorded steps and re-verified at every level.

mod solve;
mod steps;

use std::collections::BTreeSet;

pub use solve::{solve, solve_node, BruteCheck, Certificate, Leaf, Solution, SolveNode, Strategy};
pub use steps::{
    adjoint_project, factor_witness, omega_conjugate, parabolic_reduce, product_split,
};

use crate::acceptable::{maximal_newton_state, Problem};
use crate::num::{fmt_vec, Q};
use crate::superbasic::SuperbasicWitness;
use crate::weyl::{ExtAffineElement, Permutation};
use crate::{Error, Result};

/// `w ≤ t^{x(μ)}` with `ν̄_{w,σ}` the maximal point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub w: ExtAffineElement,
    pub x: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    /// A point of `V^σ` (trace-zero coordinates).
    pub fixed_point: Vec<Q>,
    /// Integral spanning set of `V′`.
    pub direction: Vec<Vec<i64>>,
    pub v0: Vec<i128>,
    pub v0_bar: Vec<i128>,
    /// Simple roots of `J` (0-based).
    pub j: BTreeSet<usize>,
    pub z: Permutation,
    /// `σ^J = Ad(τ_J) ∘ σ₀`.
    pub tau_j: ExtAffineElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepData {
    Adjoint,
    OmegaConjugate {
        tau0: ExtAffineElement,
    },
    ProductSplit {
        /// Blocks `b₁ → ⋯ → b_m` of the `σ₀`-cycle.
        cycle: Vec<usize>,
        /// `σ₀^k(μ_{b_{m−k}})` on `b_m`, in factor order.
        parts: Vec<Vec<i64>>,
        gamma: Vec<i64>,
    },
    Parabolic(ParabolicData),
}

impl StepData {
    pub fn kind(&self) -> &'static str {
        match self {
            StepData::Adjoint => "adjoint",
            StepData::OmegaConjugate { .. } => "omega-conjugate",
            StepData::ProductSplit { .. } => "product-split",
            StepData::Parabolic(_) => "parabolic",
        }
    }
}

/// A step together with the problem it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub data: StepData,
    pub problem: Problem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub problem: Problem,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn new(problem: Problem) -> Self {
        Self {
            problem,
            steps: Vec::new(),
        }
    }

    /// The problem reached so far.
    pub fn last(&self) -> &Problem {
        self.steps.last().map_or(&self.problem, |s| &s.problem)
    }

    pub fn push(&mut self, step: TraceStep) {
        self.steps.push(step);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseCase {
    Torus,
    Superbasic {
        m: u64,
        n: u64,
        witness: Box<SuperbasicWitness>,
    },
}

/// Checks `w ≤ t^{x(μ)}` and `ν̄_{w,σ} = ν_max`; returns `ν_max` (GL coordinates).
pub fn verify_witness(problem: &Problem, witness: &Witness) -> Result<Vec<Q>> {
    let datum = problem.datum();
    let bound = ExtAffineElement::translation(&witness.x.act(&problem.mu));
    if !datum.bruhat_leq(&witness.w, &bound) {
        return Err(Error::Verification(format!(
            "{} is not below {bound}",
            witness.w
        )));
    }
    let max = maximal_newton_state(problem)?.nu;
    let got = problem.normalized_newton(&witness.w)?;
    if got != max {
        return Err(Error::Verification(format!(
            "{} has Newton point {} but the maximum is {}",
            witness.w,
            fmt_vec(&got),
            fmt_vec(&max)
        )));
    }
    Ok(max)
}

/// Replays `trace` backwards from a verified witness of its last problem.
pub fn lift_witness(trace: &ReductionTrace, sub: &Witness) -> Result<Witness> {
    let mut cur = sub.clone();
    for i in (0..trace.steps.len()).rev() {
        let before = if i == 0 {
            &trace.problem
        } else {
            &trace.steps[i - 1].problem
        };
        cur = steps::lift_step(before, &trace.steps[i], &cur)?;
    }
    verify_witness(&trace.problem, &cur)?;
    Ok(cur)
}
