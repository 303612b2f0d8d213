//! Newton iterations `ν_k(f) = f − φ(A ν_{k−1}(f))`, `ν_0 = f`, for inverting
//! `x + φ(Ax)`: exact polynomial inversion for `φ(ζ) = ζ^d`, exact pointwise
//! iteration, and floating iteration for general `φ`.

mod numeric;
mod pointwise;

pub use numeric::{newton_numeric, relative_change};
pub use pointwise::{pointwise_certificate, pointwise_newton, PointwiseCertificate};

use crate::error::{Error, Result};
use crate::exactalg::RMatrix;
use crate::mpoly::{MPoly, PolyMap};

/// Outcome of a successful finite Newton inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonResult {
    pub inverse: PolyMap,
    /// Newton order: the first `k` with `ν_{k+1} = ν_k`.
    pub order: usize,
}

/// Limits for [`finite_newton_inverse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NewtonOptions {
    /// Largest admissible order; `None` means the matrix size.
    pub cap: Option<usize>,
    /// Largest total number of terms an iterate may have.
    pub max_terms: usize,
    /// Total number of coefficient products allowed for iterating and
    /// verifying; exceeding it yields [`Error::TooLarge`].
    pub work_budget: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            cap: None,
            max_terms: 100_000,
            work_budget: 5_000_000,
        }
    }
}

/// Remaining coefficient products.
struct Budget(usize);

impl Budget {
    fn mul(&mut self, a: &MPoly, b: &MPoly) -> Result<MPoly> {
        let cost = a.len().saturating_mul(b.len());
        if cost > self.0 {
            return Err(Error::TooLarge("Newton work budget exhausted".into()));
        }
        self.0 -= cost;
        Ok(a * b)
    }

    fn pow(&mut self, p: &MPoly, mut e: u32) -> Result<MPoly> {
        let mut result: Option<MPoly> = None;
        let mut base = p.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => self.mul(&r, &base)?,
                });
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(result.unwrap_or_else(|| MPoly::one(p.nvars())))
    }
}

fn check_dims(a: &RMatrix, nu: &PolyMap) -> Result<()> {
    if a.n() != nu.dim() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            got: nu.dim(),
        });
    }
    Ok(())
}

/// `⟨A_j, ν⟩` for every row, as polynomials in the `f` variables.
fn row_forms(a: &RMatrix, nu: &PolyMap) -> Vec<MPoly> {
    let n = a.n();
    a.rows()
        .map(|row| {
            let mut acc = MPoly::zero(n);
            for (c, p) in row.iter().zip(nu.components()) {
                if !num_traits::Zero::is_zero(c) {
                    acc = &acc + &p.scale(c);
                }
            }
            acc
        })
        .collect()
}

/// Index of the first row equal to each row, so powers are computed once per
/// distinct row.
fn first_equal_row(a: &RMatrix) -> Vec<usize> {
    (0..a.n())
        .map(|j| (0..=j).find(|&i| a.row(i) == a.row(j)).unwrap_or(j))
        .collect()
}

/// Component `i` is `start_i − w_{reps[i]}^d`.
fn subtract_powers(
    start: &PolyMap,
    w: &[MPoly],
    reps: &[usize],
    d: u32,
    budget: &mut Budget,
) -> Result<PolyMap> {
    let n = w.len();
    let mut powers: Vec<Option<MPoly>> = vec![None; n];
    let mut comps = Vec::with_capacity(n);
    for (i, s) in start.components().iter().enumerate() {
        let r = reps[i];
        if powers[r].is_none() {
            powers[r] = Some(budget.pow(&w[r], d)?);
        }
        comps.push(s - powers[r].as_ref().expect("filled"));
    }
    PolyMap::new(comps)
}

/// One Newton step for `φ(ζ) = ζ^d`: component `j` is `f_j − ⟨A_j, ν_prev⟩^d`.
pub fn newton_step(a: &RMatrix, d: u32, nu_prev: &PolyMap) -> Result<PolyMap> {
    check_dims(a, nu_prev)?;
    let w = row_forms(a, nu_prev);
    subtract_powers(
        &PolyMap::identity(a.n()),
        &w,
        &first_equal_row(a),
        d,
        &mut Budget(usize::MAX),
    )
}

/// Iterates Newton steps from the identity until two consecutive iterates
/// agree, then checks both compositions with `x + (Ax)^d`.
///
/// Writing `w_k = A ν_k` (and `w_{−1} = 0`), `ν_{k+1} = ν_k` exactly when
/// `w_k^d = w_{k−1}^d`. For `k ≥ 1` both sides share the linear part `Af`,
/// so this forces `w_k = w_{k−1}`, which is the cheaper test used here.
pub fn finite_newton_inverse(a: &RMatrix, d: u32, opts: NewtonOptions) -> Result<NewtonResult> {
    let n = a.n();
    let cap = opts.cap.unwrap_or(n);
    let reps = first_equal_row(a);
    let id = PolyMap::identity(n);
    let mut budget = Budget(opts.work_budget);
    let mut nu = id.clone();
    let mut w_prev: Vec<MPoly> = vec![MPoly::zero(n); n];
    for k in 0..=cap {
        let w = row_forms(a, &nu);
        if w == w_prev {
            if !forward_after(a, d, &nu, &reps, &mut budget)?.is_identity()
                || !iterate_from(
                    a,
                    d,
                    &PolyMap::power_map(a, d),
                    k,
                    &reps,
                    opts.max_terms,
                    &mut budget,
                )?
                .is_identity()
            {
                return Err(Error::Invariant(
                    "stabilised Newton iterate fails to invert".into(),
                ));
            }
            return Ok(NewtonResult {
                inverse: nu,
                order: k,
            });
        }
        if k == cap {
            break;
        }
        nu = subtract_powers(&id, &w, &reps, d, &mut budget)?;
        check_size(&nu, k + 1, opts.max_terms)?;
        w_prev = w;
    }
    Err(Error::NoStabilization { cap })
}

/// How a Newton order was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderEvidence {
    Symbolic(NewtonResult),
    /// The symbolic iterates exceeded the limits in the options.
    Pointwise(PointwiseCertificate),
}

impl OrderEvidence {
    pub fn order(&self) -> usize {
        match self {
            OrderEvidence::Symbolic(r) => r.order,
            OrderEvidence::Pointwise(c) => c.order(),
        }
    }

    /// Whether the inverse property was confirmed.
    pub fn verified(&self) -> bool {
        match self {
            OrderEvidence::Symbolic(_) => true,
            OrderEvidence::Pointwise(c) => c.holds(),
        }
    }
}

/// [`finite_newton_inverse`], falling back to [`pointwise_certificate`] at
/// `points` random points when the symbolic iterates get too large.
pub fn newton_order(
    a: &RMatrix,
    d: u32,
    opts: NewtonOptions,
    points: usize,
    seed: u64,
) -> Result<OrderEvidence> {
    match finite_newton_inverse(a, d, opts) {
        Ok(r) => Ok(OrderEvidence::Symbolic(r)),
        Err(Error::TooLarge(_)) => {
            pointwise_certificate(a, d, opts.cap.unwrap_or(a.n()), points, seed)
                .map(OrderEvidence::Pointwise)
        }
        Err(e) => Err(e),
    }
}

fn check_size(nu: &PolyMap, k: usize, max_terms: usize) -> Result<()> {
    if nu.term_count() > max_terms {
        return Err(Error::TooLarge(format!(
            "Newton iterate {k} has {} terms (limit {max_terms})",
            nu.term_count()
        )));
    }
    Ok(())
}

/// `ν_k ∘ start`, using `ν_j ∘ start = start − (A (ν_{j−1} ∘ start))^d` with
/// `ν_0 ∘ start = start`.
fn iterate_from(
    a: &RMatrix,
    d: u32,
    start: &PolyMap,
    k: usize,
    reps: &[usize],
    max_terms: usize,
    budget: &mut Budget,
) -> Result<PolyMap> {
    let mut cur = start.clone();
    for j in 1..=k {
        cur = subtract_powers(start, &row_forms(a, &cur), reps, d, budget)?;
        check_size(&cur, j, max_terms)?;
    }
    Ok(cur)
}

/// `F ∘ g = g + (A g)^d` for `F = x + (Ax)^d`.
fn forward_after(
    a: &RMatrix,
    d: u32,
    g: &PolyMap,
    reps: &[usize],
    budget: &mut Budget,
) -> Result<PolyMap> {
    let w = row_forms(a, g);
    let mut powers: Vec<Option<MPoly>> = vec![None; a.n()];
    let mut comps = Vec::with_capacity(a.n());
    for (i, gi) in g.components().iter().enumerate() {
        let r = reps[i];
        if powers[r].is_none() {
            powers[r] = Some(budget.pow(&w[r], d)?);
        }
        comps.push(gi + powers[r].as_ref().expect("filled"));
    }
    PolyMap::new(comps)
}

/// Whether `g` is a two-sided inverse of `x + (Ax)^d`, exactly.
pub fn verify_inverse(a: &RMatrix, d: u32, g: &PolyMap) -> Result<bool> {
    check_dims(a, g)?;
    if !forward_after(a, d, g, &first_equal_row(a), &mut Budget(usize::MAX))?.is_identity() {
        return Ok(false);
    }
    Ok(g.compose(&PolyMap::power_map(a, d))?.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::jacobian_det;

    #[test]
    fn zero_matrix_has_order_zero() {
        let r = finite_newton_inverse(&RMatrix::zeros(3), 2, NewtonOptions::default()).unwrap();
        assert_eq!(r.order, 0);
        assert!(r.inverse.is_identity());
        assert_eq!(
            newton_step(&RMatrix::zeros(2), 2, &PolyMap::identity(2)).unwrap(),
            PolyMap::identity(2)
        );
    }

    #[test]
    fn dim2_universal_order_one() {
        let u = RMatrix::from_i64(&[&[2, -2], &[2, -2]]);
        let r = finite_newton_inverse(&u, 3, NewtonOptions::default()).unwrap();
        assert_eq!(r.order, 1);
        assert_eq!(
            r.inverse,
            newton_step(&u, 3, &PolyMap::identity(2)).unwrap()
        );
        assert_eq!(jacobian_det(&r.inverse), MPoly::one(2));
    }

    #[test]
    fn order_equals_rank_for_six_by_six() {
        let m = RMatrix::from_i64(&[
            &[0, 13, -13, 9, 10, -19],
            &[12, 11, -11, 7, 8, -15],
            &[12, 11, -11, 7, 8, -15],
            &[6, 4, 5, 1, 2, -3],
            &[6, 4, 5, 1, 2, -3],
            &[6, 4, 5, 1, 2, -3],
        ]);
        let r = finite_newton_inverse(&m, 2, NewtonOptions::default()).unwrap();
        assert_eq!(r.order, m.rank());
        assert_eq!(r.order, 3);
    }

    #[test]
    fn failures() {
        assert!(!verify_inverse(
            &RMatrix::from_i64(&[&[1, -1], &[1, -1]]),
            2,
            &PolyMap::identity(2)
        )
        .unwrap());
        let bad = RMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            finite_newton_inverse(&bad, 2, NewtonOptions::default()),
            Err(Error::NoStabilization { cap: 2 })
        ));
    }
}
