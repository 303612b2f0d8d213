use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::phi::PhiDerivative;
use crate::error::{Error, Result};
use crate::exactalg::{RMatrix, Rational};
use crate::mpoly::MPoly;

/// Largest size for which the `2^n − 1` subset sum is attempted.
pub const MAX_SUBSET_DIM: usize = 12;

/// Per-product cap on term multiplications inside [`subset_expansion`].
const WORK_LIMIT: usize = 40_000_000;

fn guard(n: usize) -> Result<()> {
    if n > MAX_SUBSET_DIM {
        return Err(Error::CostGuard(format!(
            "subset expansion over n = {n} > {MAX_SUBSET_DIM}"
        )));
    }
    Ok(())
}

/// `Σ_{I≠∅} minors[I] · ∏_{j∈I} inside[j] · ∏_{j∉I} outside[j]`, with
/// `outside = None` meaning all ones. `minors` is indexed by bitmask.
///
/// Depth-first over include/exclude decisions so partial products are
/// shared, skipping every branch whose completions all have zero minors.
pub fn subset_expansion(
    minors: &[Rational],
    inside: &[MPoly],
    outside: Option<&[MPoly]>,
    nvars: usize,
) -> Result<MPoly> {
    let n = inside.len();
    guard(n)?;
    if minors.len() != 1 << n {
        return Err(Error::SizeMismatch {
            expected: 1 << n,
            got: minors.len(),
        });
    }
    // live[t][m]: some mask whose low t bits equal m has a nonzero minor.
    let mut live: Vec<Vec<bool>> = vec![Vec::new(); n + 1];
    live[n] = minors
        .iter()
        .enumerate()
        .map(|(m, v)| m != 0 && !v.is_zero())
        .collect();
    for t in (0..n).rev() {
        live[t] = (0..1usize << t)
            .map(|m| live[t + 1][m] || live[t + 1][m | 1 << t])
            .collect();
    }

    struct Walk<'a> {
        minors: &'a [Rational],
        inside: &'a [MPoly],
        outside: Option<&'a [MPoly]>,
        live: Vec<Vec<bool>>,
        acc: MPoly,
    }

    impl Walk<'_> {
        fn go(&mut self, t: usize, mask: usize, prod: Option<MPoly>) -> Result<()> {
            if !self.live[t][mask] {
                return Ok(());
            }
            if t == self.inside.len() {
                let term = match prod {
                    Some(p) => p.scale(&self.minors[mask]),
                    None => MPoly::constant(self.acc.nvars(), self.minors[mask].clone()),
                };
                self.acc = &self.acc + &term;
                return Ok(());
            }
            let times = |p: &Option<MPoly>, w: &MPoly| -> Result<Option<MPoly>> {
                match p {
                    None => Ok(Some(w.clone())),
                    Some(p) => p
                        .mul_bounded(w, WORK_LIMIT)
                        .map(Some)
                        .ok_or_else(|| Error::TooLarge("subset expansion product".into())),
                }
            };
            let with = times(&prod, &self.inside[t])?;
            self.go(t + 1, mask | 1 << t, with)?;
            let without = match self.outside {
                None => prod,
                Some(out) => times(&prod, &out[t])?,
            };
            self.go(t + 1, mask, without)
        }
    }

    let mut walk = Walk {
        minors,
        inside,
        outside,
        live,
        acc: MPoly::zero(nvars),
    };
    walk.go(0, 0, None)?;
    Ok(walk.acc)
}

fn int(v: u32) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `ψ_j = d·ℓ_j^{d−1}` for the given row forms.
fn monomial_weights(forms: &[MPoly], d: u32) -> Vec<MPoly> {
    forms.iter().map(|l| l.pow(d - 1).scale(&int(d))).collect()
}

/// Row forms `ℓ_j = ⟨A_j, ·⟩` written in coordinates on the column space of
/// `A`: `ℓ_j(z) = Σ_c a_{j,p_c} z_c` over the pivot columns `p_c`.
///
/// `Ax` sweeps the whole column space as `x` varies, so an identity in the
/// `ℓ_j` holds for all `x` iff it holds in these `rank A` coordinates.
fn column_space_forms(a: &RMatrix) -> (Vec<MPoly>, usize) {
    let piv = a.pivot_columns();
    let r = piv.len();
    let forms = a
        .rows()
        .map(|row| MPoly::linear(&piv.iter().map(|&c| row[c].clone()).collect::<Vec<_>>()))
        .collect();
    (forms, r)
}

/// The Jacobian of `x + (Ax)^d` as a polynomial in `x`:
/// `1 + Σ_{I≠∅} [A]_I ∏_{j∈I} d⟨A_j,x⟩^{d−1}`.
pub fn jacobian_minor_expansion(a: &RMatrix, d: u32) -> Result<MPoly> {
    let n = a.n();
    guard(n)?;
    let forms: Vec<MPoly> = a.rows().map(MPoly::linear).collect();
    let sum = subset_expansion(
        &a.all_principal_minors(),
        &monomial_weights(&forms, d),
        None,
        n,
    )?;
    Ok(&MPoly::one(n) + &sum)
}

/// Whether the Jacobian of `x + (Ax)^d` is identically one (its constant
/// term is always one, so "nonzero constant" means exactly this).
pub fn is_good_pair_monomial(a: &RMatrix, d: u32) -> Result<bool> {
    guard(a.n())?;
    if d == 0 {
        return Ok(true);
    }
    let (forms, r) = column_space_forms(a);
    let sum = subset_expansion(
        &a.all_principal_minors(),
        &monomial_weights(&forms, d),
        None,
        r,
    )?;
    Ok(sum.is_zero())
}

/// Whether `x + log(Ax)` has unit Jacobian.
///
/// Clearing the denominators `∏ ℓ_j` turns `J ≡ 1` into the polynomial
/// identity `Σ_{I≠∅} [A]_I ∏_{j∉I} ℓ_j ≡ 0`. A zero row makes the map
/// undefined everywhere.
pub fn is_good_pair_log(a: &RMatrix) -> Result<bool> {
    guard(a.n())?;
    if let Some(j) = (0..a.n()).find(|&j| a.row(j).iter().all(Zero::is_zero)) {
        return Err(Error::Undefined(format!(
            "row {} is zero, so log⟨A_j,x⟩ is nowhere defined",
            j + 1
        )));
    }
    let (forms, r) = column_space_forms(a);
    let ones = vec![MPoly::one(r); a.n()];
    let sum = subset_expansion(&a.all_principal_minors(), &ones, Some(&forms), r)?;
    Ok(sum.is_zero())
}

/// `J(A, φ; x) = Σ_I [A]_I ∏_{j∈I} φ′(⟨A_j, x⟩)` by direct subset summation,
/// exact over the rationals. Subset products are built from the product for
/// the subset without its lowest element.
pub fn jacobian_value_general<P: PhiDerivative<Rational> + ?Sized>(
    a: &RMatrix,
    phi: &P,
    x: &[Rational],
) -> Result<Rational> {
    let n = a.n();
    guard(n)?;
    let ell = a.mul_vec(x)?;
    let psi = ell
        .iter()
        .map(|z| phi.derivative(z))
        .collect::<Result<Vec<_>>>()?;
    let minors = a.all_principal_minors();
    let mut prod = vec![Rational::one(); 1 << n];
    let mut sum = Rational::zero();
    for mask in 0..1usize << n {
        if mask != 0 {
            let low = mask.trailing_zeros() as usize;
            prod[mask] = &prod[mask & (mask - 1)] * &psi[low];
        }
        if !minors[mask].is_zero() {
            sum += &minors[mask] * &prod[mask];
        }
    }
    Ok(sum)
}
