use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::goodpair::{CMatrix, Phi};

/// `ν_iters(f)` in double precision, starting from `ν_0 = f`.
pub fn newton_numeric(
    a: &CMatrix,
    phi: Phi,
    f: &[Complex64],
    iters: usize,
) -> Result<Vec<Complex64>> {
    if f.len() != a.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            got: f.len(),
        });
    }
    let mut nu = f.to_vec();
    for _ in 0..iters {
        let w = a.mul_vec(&nu)?;
        nu = f
            .iter()
            .zip(w)
            .map(|(fj, wj)| phi.apply_f64(wj).map(|p| fj - p))
            .collect::<Result<Vec<_>>>()?;
        if nu.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
    }
    Ok(nu)
}

/// `‖a − b‖_∞ / ‖b‖_∞`.
pub fn relative_change(a: &[Complex64], b: &[Complex64]) -> f64 {
    let diff = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    let scale = b
        .iter()
        .map(|y| y.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    diff / scale
}
