use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Permutation, RMatrix, Rational};
use crate::universal::{Partition, UniversalSpec};

fn pow(v: &Rational, e: u32) -> Rational {
    num_traits::pow(v.clone(), e as usize)
}

/// `(Aᵀ)^{⊙(d−1)} · diag A`; vanishes for every good pair with `ζ^d`.
pub fn simple_jacobian_equations(a: &RMatrix, d: u32) -> Vec<Rational> {
    let diag = a.diagonal();
    a.transpose()
        .hadamard_pow(d - 1)
        .mul_vec(&diag)
        .expect("same size")
}

/// `H_{n,d}(s)` with entry `(j,k) = (∏_{i≠j} s_i) · s_k^d`.
pub fn homogeneity_matrix(d: u32, s: &[Rational]) -> RMatrix {
    let n = s.len();
    let others: Vec<Rational> = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| i != j)
                .fold(Rational::one(), |p, i| p * &s[i])
        })
        .collect();
    RMatrix::from_fn(n, |j, k| &others[j] * pow(&s[k], d))
}

/// `[[s t^d, −s^{d+1}], [t^{d+1}, −s^d t]]`.
pub fn g2d(s: &Rational, t: &Rational, d: u32) -> RMatrix {
    RMatrix::new(
        2,
        vec![
            s * pow(t, d),
            -pow(s, d + 1),
            pow(t, d + 1),
            -(pow(s, d) * t),
        ],
    )
    .expect("2x2")
}

/// Factors of a rank-one good matrix `c ⊗ v` (entry `c_j v_k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1Decomposition {
    /// Single Z block `U(n, ε_1)` with parameters `a_k = v_k c_k^d ∏_i c_i`.
    pub spec: UniversalSpec,
    /// `s_j = 1/c_j`.
    pub s: Vec<Rational>,
}

/// `c ⊗ v` forms a good pair with `ζ^d` iff `Σ c_j^d v_j = 0`. When it does,
/// returns `U` and `s` with `U ⊙ H_{n,d}(s) = c ⊗ v` exactly.
pub fn rank1_good_pair_decomposition(
    c: &[Rational],
    v: &[Rational],
    d: u32,
) -> Result<Option<Rank1Decomposition>> {
    let n = c.len();
    if v.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: v.len(),
        });
    }
    if n == 0 {
        return Err(Error::Invariant("empty vectors".into()));
    }
    if let Some(j) = c.iter().position(Zero::is_zero) {
        return Err(Error::Invariant(format!("c_{} is zero", j + 1)));
    }
    let cond = c
        .iter()
        .zip(v)
        .fold(Rational::zero(), |acc, (cj, vj)| acc + pow(cj, d) * vj);
    if !cond.is_zero() {
        return Ok(None);
    }
    let prod = c.iter().fold(Rational::one(), |p, x| p * x);
    let a: Vec<Rational> = c
        .iter()
        .zip(v)
        .map(|(cj, vj)| vj * pow(cj, d) * &prod)
        .collect();
    let spec = UniversalSpec::new(Partition::new(vec![n])?, Permutation::identity(1), vec![a])?;
    Ok(Some(Rank1Decomposition {
        spec,
        s: c.iter().map(Rational::recip).collect(),
    }))
}
