//! Exact computations with acceptable Newton points of twisted extended affine
//! Weyl groups of type A.
//!
//! The crate models `W̃ = ℤ^n ⋊ S_n` (and products of such groups) with a
//! Frobenius twist `σ = Ad(τ) ∘ σ₀`, computes the set of acceptable Newton
//! points `B(W̃, μ, σ)`, its unique maximal element, and an element of the
//! admissible set `Adm(μ)` realising it, together with certificates that can
//! be re-checked independently.
//!
//! Module map:
//!
//! * [`weyl`] permutations, group elements, length, reduced words, Bruhat order
//! * [`newton`] Frobenius descriptors, Newton points, Kottwitz invariants
//! * [`acceptable`] the acceptable set, its maximum, and the admissible set
//! * [`superbasic`] the superbasic construction with a Bruhat-chain certificate
//! * [`reduction`] the reductions assembling the general solver
//! * [`json`] the `bgmu/1` interchange documents

pub mod acceptable;
mod error;
pub mod json;
pub mod newton;
pub mod num;
pub mod reduction;
pub mod superbasic;
pub mod weyl;

pub use error::{Error, Result};
pub use num::Q;

pub use acceptable::{
    adm_enumerate, adm_member, enumerate_acceptable, maximal_newton, mu_diamond_acceptable,
    newton_criterion, newton_witness, AcceptableSet, Guard, MaximalSolverState, Problem,
};
pub use newton::{
    diamond, dominance_leq, dominant_rep, kappa, newton_point, DiagramAutomorphism,
    FrobeniusDescriptor, KappaValue, NewtonPoint, NewtonReport,
};
pub use reduction::{
    adjoint_project, factor_witness, lift_witness, omega_conjugate, parabolic_reduce,
    product_split, solve, ReductionTrace, Solution, Strategy, Witness,
};
pub use superbasic::{
    chi, epsilon, euclid_chain, polygon, sharp_peel, superbasic_witness, EuclideanChain,
    PeelCertificate, PolygonData, Segment, SuperbasicWitness,
};
pub use weyl::{
    superbasic_element, Block, ExtAffineElement, GroupDatum, Letter, Permutation, ReducedWord,
};
