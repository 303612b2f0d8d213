use std::collections::HashMap;

use super::{MPoly, PolyMap};
use crate::error::{Error, Result};

/// Matrix of partials, entry `[k][j] = ∂f_k/∂x_j`.
pub fn jacobian_matrix(f: &PolyMap) -> Vec<Vec<MPoly>> {
    let n = f.dim();
    f.components()
        .iter()
        .map(|c| (0..n).map(|j| c.derivative(j)).collect())
        .collect()
}

/// Determinant of a square matrix over the polynomial ring.
///
/// Row-by-row Laplace expansion memoised on column subsets: the minor on the
/// first `k` rows and column set `S` is built from the minors on `k-1` rows.
/// Cost is `O(n·2^n)` polynomial products.
pub fn poly_det(m: &[Vec<MPoly>], nvars: usize) -> Result<MPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Invariant("polynomial matrix is not square".into()));
    }
    if n > 24 {
        return Err(Error::CostGuard(format!("determinant of size {n}")));
    }
    let mut level: HashMap<u32, MPoly> = HashMap::new();
    level.insert(0, MPoly::one(nvars));
    for (k, row) in m.iter().enumerate() {
        let mut next: HashMap<u32, MPoly> = HashMap::new();
        for (&mask, minor) in &level {
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let prod = entry * minor;
                // Sign of column c in S = mask ∪ {c}: elements of S above c.
                let above = (mask >> (c + 1)).count_ones();
                let key = mask | (1 << c);
                let slot = next.entry(key).or_insert_with(|| MPoly::zero(nvars));
                *slot = if above % 2 == 0 {
                    &*slot + &prod
                } else {
                    &*slot - &prod
                };
            }
        }
        next.retain(|_, p| !p.is_zero());
        level = next;
        if level.is_empty() {
            return Ok(MPoly::zero(nvars));
        }
        debug_assert!(level.keys().all(|m| m.count_ones() as usize == k + 1));
    }
    Ok(level
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| MPoly::zero(nvars)))
}

/// Symbolic Jacobian determinant `det(∂f_k/∂x_j)`.
pub fn jacobian_det(f: &PolyMap) -> MPoly {
    poly_det(&jacobian_matrix(f), f.dim()).expect("square by construction")
}
