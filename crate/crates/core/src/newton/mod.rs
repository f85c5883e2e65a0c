//! Newton points, Kottwitz invariants and the dominance order.

mod frobenius;
mod point;
pub mod roots;

pub use frobenius::{DiagramAutomorphism, FrobeniusDescriptor};
pub use point::{
    adjoint_image, diamond, dominance_leq, dominance_leq_vec, dominant_rep, kappa, kappa_class,
    newton_point, KappaValue, NewtonPoint, NewtonReport,
};
