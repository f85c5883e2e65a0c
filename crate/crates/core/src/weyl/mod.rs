//! The extended affine Weyl group `ℤ^n ⋊ S_n` and block products of it.

pub mod affine;
mod element;
mod group;
mod literal;
mod perm;

pub use element::{length_zero_element, superbasic_element, ExtAffineElement};
pub use group::{Block, GroupDatum, Letter, ReducedWord};
pub use literal::{format_element, parse_element};
pub use perm::Permutation;
