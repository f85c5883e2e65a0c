//! The superbasic case `σ = σ_{m,n}` on `GL_n`.

mod euclid;
mod peel;
mod segment;
mod sequences;

pub use euclid::{
    euclid_chain, euclid_step, level_decompose, phi, templates, EuclideanChain, LevelInfo,
};
pub use peel::{
    sharp_peel, superbasic_witness, BlockPeel, ChainLink, PeelCase, PeelCertificate, PeelStep,
    SuperbasicWitness,
};
pub use segment::{polygon, PolygonData, Segment};
pub use sequences::{a_sequence_cmp, a_sequence_less, chi, epsilon, epsilon_mn};
