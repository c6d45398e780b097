//! Exact diagram categories for group-equivariant linear layers.
//!
//! Morphisms of the partition, Brauer and Brauer–Grood categories are
//! finite linear combinations of set partition diagrams. The functors in
//! [`functors`] send them to the equivariant matrices for S_n, O(n), Sp(n)
//! and SO(n), and [`fast`] applies the S_n matrices to vectors through a
//! permutation / Kronecker / permutation factorization.

pub mod algebra;
pub mod check;
pub mod counting;
pub mod error;
pub mod fast;
pub mod functors;
pub mod groups;
pub mod notation;
pub mod perm;
pub mod sampling;
pub mod setpart;
pub mod union_find;

pub use error::{Error, Result};
