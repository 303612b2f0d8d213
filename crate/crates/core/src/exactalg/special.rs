use num_traits::{One, Zero};

use super::matrix::RMatrix;
use super::rational::Rational;

/// Circulant matrix with first row `v`; row `j` is `v` shifted right by `j`.
pub fn circulant(v: &[Rational]) -> RMatrix {
    let n = v.len();
    assert!(n > 0, "circulant of an empty vector");
    RMatrix::from_fn(n, |i, j| v[(j + n - i) % n].clone())
}

/// `V(v)` with entries `v_j^k`, `k = 1..n`; zero coordinates give zero rows.
pub fn vandermonde_type(v: &[Rational]) -> RMatrix {
    RMatrix::from_fn(v.len(), |i, k| num_traits::pow(v[i].clone(), k + 1))
}

/// Basis of the kernel of `V(v)ᵀ`.
///
/// Indices are grouped by equal value; a zero-valued coordinate is free, and
/// each nonzero group `{i_1 < … < i_q}` contributes `e_{i_t} − e_{i_q}` for
/// `t < q`. Vectors are ordered by their first nonzero coordinate.
pub fn vandermonde_kernel(v: &[Rational]) -> Vec<Vec<Rational>> {
    let n = v.len();
    let mut basis = Vec::new();
    for i in 0..n {
        if v[i].is_zero() {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            basis.push(e);
            continue;
        }
        // last member of i's group
        let Some(last) = (i + 1..n).rev().find(|&k| v[k] == v[i]) else {
            continue;
        };
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        e[last] = -Rational::one();
        basis.push(e);
    }
    basis
}
