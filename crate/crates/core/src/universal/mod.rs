//! Universal matrices: ordered forms, the block row-sum matrix `S(A)`, and
//! the construction `U(p, Π)` from a partition and a permutation.

mod build;
mod ordered;
mod partition;
mod spec;

pub use build::{
    build_universal, decompose, eta, free_parameter_count, parameter_count, random_permutation,
    random_spec, random_universal, reduce_trivial, tau,
};
pub use ordered::{block_row_sum_matrix, is_universal, ordered_form, OrderedForm};
pub use partition::Partition;
pub use spec::UniversalSpec;
