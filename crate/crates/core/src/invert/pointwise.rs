use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{RMatrix, Rational};

/// Newton iteration for `ζ^d` at one rational point `f`, exactly. Returns
/// `(ν(f), k)` for the first `k` with `A ν_k(f) = A ν_{k−1}(f)`.
pub fn pointwise_newton(
    a: &RMatrix,
    d: u32,
    f: &[Rational],
    cap: usize,
) -> Result<(Vec<Rational>, usize)> {
    let n = a.n();
    if f.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: f.len(),
        });
    }
    if let Some(res) = integer_newton(a, d, f, cap) {
        return res;
    }
    let mut nu = f.to_vec();
    let mut w_prev = vec![Rational::default(); n];
    for k in 0..=cap {
        let w = a.mul_vec(&nu)?;
        if w == w_prev {
            return Ok((nu, k));
        }
        nu = f
            .iter()
            .zip(&w)
            .map(|(fj, wj)| fj - num_traits::pow(wj.clone(), d as usize))
            .collect();
        w_prev = w;
    }
    Err(Error::NoStabilization { cap })
}

fn as_integers(v: &[Rational]) -> Option<Vec<BigInt>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Same iteration on integers, which avoids gcd normalisation.
fn integer_newton(
    a: &RMatrix,
    d: u32,
    f: &[Rational],
    cap: usize,
) -> Option<Result<(Vec<Rational>, usize)>> {
    let rows: Vec<Vec<BigInt>> = a.rows().map(as_integers).collect::<Option<_>>()?;
    let f = as_integers(f)?;
    let n = f.len();
    let mut nu = f.clone();
    let mut w_prev = vec![BigInt::default(); n];
    for k in 0..=cap {
        let w: Vec<BigInt> = rows
            .iter()
            .map(|r| r.iter().zip(&nu).map(|(c, x)| c * x).sum())
            .collect();
        if w == w_prev {
            return Some(Ok((
                nu.into_iter().map(Rational::from_integer).collect(),
                k,
            )));
        }
        nu = f.iter().zip(&w).map(|(fj, wj)| fj - wj.pow(d)).collect();
        w_prev = w;
    }
    Some(Err(Error::NoStabilization { cap }))
}

/// Evidence that Newton iteration inverts `x + (Ax)^d`, gathered at random
/// integer points.
///
/// A symbolic identity `w_k = w_{k−1}` holds at every point. Conversely a
/// nonzero polynomial of degree `D` vanishes at a uniformly random point of
/// `[−M, M]^n` with probability at most `D / (2M + 1)`, so with
/// `M = 10^12` the largest observed order equals the symbolic order except
/// with negligible probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseCertificate {
    pub orders: Vec<usize>,
    /// `F(ν(f)) = f` at every sampled `f`.
    pub right_inverse: bool,
    /// `ν(F(x)) = x` at every sampled `x`.
    pub left_inverse: bool,
}

impl PointwiseCertificate {
    pub fn order(&self) -> usize {
        self.orders.iter().copied().max().unwrap_or(0)
    }

    pub fn holds(&self) -> bool {
        self.right_inverse && self.left_inverse
    }
}

fn forward(a: &RMatrix, d: u32, x: &[Rational]) -> Result<Vec<Rational>> {
    Ok(a.mul_vec(x)?
        .into_iter()
        .zip(x)
        .map(|(w, xj)| xj + num_traits::pow(w, d as usize))
        .collect())
}

pub fn pointwise_certificate(
    a: &RMatrix,
    d: u32,
    cap: usize,
    points: usize,
    seed: u64,
) -> Result<PointwiseCertificate> {
    const M: i64 = 1_000_000_000_000;
    let n = a.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<Rational> {
        (0..n)
            .map(|_| Rational::from_integer(BigInt::from(rng.random_range(-M..=M))))
            .collect()
    };
    let mut cert = PointwiseCertificate {
        orders: Vec::new(),
        right_inverse: true,
        left_inverse: true,
    };
    for _ in 0..points {
        let f = draw(&mut rng);
        let (nu, k) = pointwise_newton(a, d, &f, cap)?;
        cert.orders.push(k);
        cert.right_inverse &= forward(a, d, &nu)? == f;
        let x = draw(&mut rng);
        let y = forward(a, d, &x)?;
        let (back, k2) = pointwise_newton(a, d, &y, cap)?;
        cert.orders.push(k2);
        cert.left_inverse &= back == x;
    }
    Ok(cert)
}
