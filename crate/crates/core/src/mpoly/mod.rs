//! Sparse multivariate polynomials over the rationals and polynomial self-maps.
//!
//! Terms are kept in graded-lexicographic order (`x1 > x2 > …`), so equality
//! is structural and serialisation is deterministic.

mod format;
mod jacobian;
mod map;
mod poly;

pub use format::{parse_machine_line, parse_polymap};
pub use jacobian::{jacobian_det, jacobian_matrix, poly_det};
pub use map::PolyMap;
pub use poly::{MPoly, Monomial};
