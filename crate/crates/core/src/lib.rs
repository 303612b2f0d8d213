//! Exact construction, classification, verification and inversion of
//! Jacobian maps of the form `x + φ(Ax)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactalg`]: rationals, dense rational matrices, permutations and the
//!   combinatorial matrix operations (principal minors, permutation
//!   similarity, Hadamard/Kronecker products, circulants).
//! - [`mpoly`]: sparse multivariate polynomials over the rationals and
//!   polynomial self-maps, including the symbolic Jacobian determinant.
//! - [`universal`]: ordered forms, the block row-sum matrix, recognition and
//!   construction of universal matrices from a partition and a permutation.
//! - [`goodpair`]: the principal-minor expansion of the Jacobian, good-pair
//!   tests for monomial, logarithmic and exponential `φ`, Jacobian equation
//!   systems and homogeneity matrices.
//! - [`invert`]: Newton iterations, exact finite Newton inverses and Newton
//!   order measurement.
//! - [`fixtures`]: the embedded catalogue of worked example matrices.

pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod goodpair;
pub mod invert;
pub mod mpoly;
pub mod universal;

pub use error::{Error, Result};
pub use exactalg::{IndexSet, Permutation, RMatrix, Rational};
pub use mpoly::{MPoly, Monomial, PolyMap};
