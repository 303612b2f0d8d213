//! Exact rational scalars, dense square matrices and the combinatorial matrix
//! operations everything else is built on.
//!
//! Index sets and permutations use 1-based indices at the API boundary;
//! [`RMatrix`] accessors are 0-based.

mod matrix;
mod perm;
mod rational;
mod special;
mod triangular;

pub use matrix::RMatrix;
pub use perm::{IndexSet, Permutation};
pub use rational::{parse_rational, rat, rat_frac, Rational};
pub use special::{circulant, vandermonde_kernel, vandermonde_type};
pub use triangular::{all_principal_minors_vanish, strict_triangularization};
