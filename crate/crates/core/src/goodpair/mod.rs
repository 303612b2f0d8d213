//! Good pairs `(A, φ)`: the principal-minor expansion of the Jacobian of
//! `x + φ(Ax)`, exact and floating verification, Jacobian equation systems
//! for `φ(ζ) = ζ^d`, homogeneity matrices and the rank-one decomposition.

mod equations;
mod expansion;
mod float;
mod homogeneity;
mod phi;

pub use equations::{generate_jacobian_equations, JacEquationSystem, EQUATION_GUARD};
pub use expansion::{
    is_good_pair_log, is_good_pair_monomial, jacobian_minor_expansion, jacobian_value_general,
    subset_expansion, MAX_SUBSET_DIM,
};
pub use float::{float_good_pair_check, jacobian_value_float, random_complex_point, CMatrix};
pub use homogeneity::{
    g2d, homogeneity_matrix, rank1_good_pair_decomposition, simple_jacobian_equations,
    Rank1Decomposition,
};
pub use phi::{Phi, PhiDerivative};
