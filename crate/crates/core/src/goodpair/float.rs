use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::phi::{Phi, PhiDerivative};
use crate::error::{Error, Result};
use crate::exactalg::RMatrix;

/// Dense square complex matrix for the floating path.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl CMatrix {
    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: r.len(),
            });
        }
        Ok(CMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_rational(a: &RMatrix) -> Self {
        let entries = a
            .entries()
            .iter()
            .map(|v| Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect();
        CMatrix { n: a.n(), entries }
    }

    /// `C[i][j] = v[(j − i) mod n]`.
    pub fn circulant(v: &[Complex64]) -> Self {
        let n = v.len();
        let entries = (0..n * n).map(|k| v[(k % n + n - k / n) % n]).collect();
        CMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Determinant of the principal submatrix on `idx`, by LU with partial pivoting.
    pub fn principal_det(&self, idx: &[usize]) -> Complex64 {
        let k = idx.len();
        let mut m: Vec<Complex64> = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        let mut det = Complex64::new(1.0, 0.0);
        for c in 0..k {
            let p = (c..k)
                .max_by(|&a, &b| m[a * k + c].norm().total_cmp(&m[b * k + c].norm()))
                .unwrap_or(c);
            if m[p * k + c].is_zero() {
                return Complex64::zero();
            }
            if p != c {
                for j in 0..k {
                    m.swap(p * k + j, c * k + j);
                }
                det = -det;
            }
            let piv = m[c * k + c];
            det *= piv;
            for i in c + 1..k {
                let f = m[i * k + c] / piv;
                for j in c..k {
                    let v = m[c * k + j];
                    m[i * k + j] -= f * v;
                }
            }
        }
        det
    }

    pub fn all_principal_minors(&self) -> Vec<Complex64> {
        (0usize..1 << self.n)
            .map(|mask| {
                let idx: Vec<usize> = (0..self.n).filter(|b| mask >> b & 1 == 1).collect();
                self.principal_det(&idx)
            })
            .collect()
    }
}

/// Floating `J(A, φ; x)` by subset summation.
pub fn jacobian_value_float<P: PhiDerivative<Complex64> + ?Sized>(
    a: &CMatrix,
    phi: &P,
    x: &[Complex64],
) -> Result<Complex64> {
    let n = a.n();
    if n > super::MAX_SUBSET_DIM {
        return Err(Error::CostGuard(format!("subset expansion over n = {n}")));
    }
    let ell = a.mul_vec(x)?;
    let psi = ell
        .iter()
        .map(|z| phi.derivative(z))
        .collect::<Result<Vec<_>>>()?;
    let minors = a.all_principal_minors();
    let mut prod = vec![Complex64::new(1.0, 0.0); 1 << n];
    let mut sum = Complex64::zero();
    for mask in 0..1usize << n {
        if mask != 0 {
            prod[mask] = prod[mask & (mask - 1)] * psi[mask.trailing_zeros() as usize];
        }
        sum += minors[mask] * prod[mask];
    }
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::NonFinite)
    }
}

/// Random complex point with coordinates in the unit square, rescaled so
/// that every `|⟨A_j, x⟩| ≤ bound`, and redrawn while some nonzero row form
/// is below `min_abs` in modulus.
pub fn random_complex_point<R: Rng + ?Sized>(
    a: &CMatrix,
    rng: &mut R,
    bound: f64,
    min_abs: f64,
) -> Vec<Complex64> {
    let nonzero: Vec<bool> = (0..a.n())
        .map(|j| a.row(j).iter().any(|v| !v.is_zero()))
        .collect();
    loop {
        let mut x: Vec<Complex64> = (0..a.n())
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let ell = a.mul_vec(&x).expect("sizes agree");
        let top = ell.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if top > bound {
            let s = bound / top;
            x.iter_mut().for_each(|v| *v *= s);
        }
        let ell = a.mul_vec(&x).expect("sizes agree");
        if ell
            .iter()
            .zip(&nonzero)
            .all(|(z, &nz)| !nz || z.norm() >= min_abs)
        {
            return x;
        }
    }
}

/// Same text format as [`RMatrix`], entries written like `1.5-2i`.
impl std::str::FromStr for CMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", size] => size
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size in header {header:?}")))?,
            _ => {
                return Err(Error::Parse(format!(
                    "expected \"n <size>\", got {header:?}"
                )))
            }
        };
        let rows: Vec<Vec<Complex64>> = lines
            .map(|line| {
                line.split_whitespace()
                    .map(|t| {
                        t.parse::<Complex64>()
                            .map_err(|_| Error::Parse(format!("bad complex entry {t:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if n == 0 || rows.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        CMatrix::from_rows(rows)
    }
}

/// Largest `|J − 1|` over `points` random points. Arguments are kept in the
/// unit disc for `exp` and away from zero for `log`.
pub fn float_good_pair_check<R: Rng + ?Sized>(
    a: &CMatrix,
    phi: Phi,
    points: usize,
    rng: &mut R,
) -> Result<f64> {
    let (bound, min_abs) = match phi {
        Phi::Log => (4.0, 1e-3),
        _ => (1.0, 0.0),
    };
    let mut worst: f64 = 0.0;
    for _ in 0..points {
        let x = random_complex_point(a, rng, bound, min_abs);
        let j = jacobian_value_float(a, &phi, &x)?;
        worst = worst.max((j - 1.0).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lu_determinant() {
        let a = RMatrix::from_i64(&[&[2, -1, 0], &[1, 1, 3], &[0, -2, 1]]);
        let c = CMatrix::from_rational(&a);
        let exact = a.determinant();
        let approx = c.principal_det(&[0, 1, 2]);
        assert!((approx.re - exact.to_f64().unwrap()).abs() < 1e-12);
        assert_eq!(c.principal_det(&[]), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn circulant_layout() {
        let v: Vec<Complex64> = [0.0, 1.0, -1.0]
            .iter()
            .map(|&r| Complex64::new(r, 0.0))
            .collect();
        let c = CMatrix::circulant(&v);
        let e = CMatrix::from_rational(&crate::exactalg::circulant(&[rat(0), rat(1), rat(-1)]));
        assert_eq!(c, e);
    }

    #[test]
    fn exp_on_universal_and_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = CMatrix::from_rational(&RMatrix::from_i64(&[&[3, -3], &[3, -3]]));
        assert!(float_good_pair_check(&u, Phi::Exp, 10, &mut rng).unwrap() < 1e-9);
        let id = CMatrix::from_rational(&RMatrix::identity(2));
        assert!(float_good_pair_check(&id, Phi::Exp, 3, &mut rng).unwrap() > 1e-3);
    }
}
