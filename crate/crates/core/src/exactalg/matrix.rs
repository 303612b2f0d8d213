use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::perm::{IndexSet, Permutation};
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Dense square matrix of rationals, row-major, `n ≥ 1`.
///
/// A `0 × 0` matrix only arises as the result of [`crate::universal::reduce_trivial`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                got: entries.len(),
            });
        }
        Ok(RMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        RMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RMatrix { n, entries })
    }

    /// Convenience constructor for integer matrices; panics if not square.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n, "matrix must be square");
                r.iter().map(|&v| Rational::from_integer(BigInt::from(v)))
            })
            .collect();
        RMatrix { n, entries }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.n).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> Rational {
        self.diagonal()
            .into_iter()
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(RMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same size");
        }
        acc
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self
            .rows()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// Submatrix on the given 0-based rows/columns (same list for both).
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn determinant(&self) -> Rational {
        let (ints, scale) = self.integer_rows();
        bareiss_det(ints) / scale
    }

    /// `[A]_I` for a 1-based index set.
    pub fn principal_minor(&self, set: &IndexSet) -> Result<Rational> {
        let idx = self.zero_based(set)?;
        if idx.is_empty() {
            return Ok(Rational::one());
        }
        Ok(self.principal_submatrix(&idx).determinant())
    }

    fn zero_based(&self, set: &IndexSet) -> Result<Vec<usize>> {
        set.indices()
            .iter()
            .map(|&i| {
                if i == 0 || i > self.n {
                    Err(Error::IndexOutOfRange {
                        index: i,
                        n: self.n,
                    })
                } else {
                    Ok(i - 1)
                }
            })
            .collect()
    }

    /// All principal minors indexed by bitmask (bit `j` ↔ row/column `j`);
    /// entry 0 is the empty minor, 1.
    pub fn all_principal_minors(&self) -> Vec<Rational> {
        assert!(
            self.n < 25,
            "2^n principal minors requested for n = {}",
            self.n
        );
        (0u64..1 << self.n)
            .map(|mask| {
                let idx: Vec<usize> = (0..self.n).filter(|b| mask >> b & 1 == 1).collect();
                if idx.is_empty() {
                    Rational::one()
                } else {
                    self.principal_submatrix(&idx).determinant()
                }
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    /// 0-based indices of pivot columns of a fraction-free row reduction.
    /// These columns form a basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let (mut m, _) = self.integer_rows();
        let (rows, cols) = (self.n, self.n);
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut prev = BigInt::one();
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = v / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    /// `A^n = 0`.
    pub fn is_nilpotent(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut acc = self.clone();
        for _ in 1..self.n {
            if acc.is_zero() {
                return true;
            }
            acc = acc.mul(self).expect("same size");
        }
        acc.is_zero()
    }

    /// `B` with `B[π(j)][π(k)] = A[j][k]`, i.e. `Π A Πᵀ`.
    pub fn permutation_similarity(&self, perm: &Permutation) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let inv = perm.inverse();
        Ok(Self::from_fn(self.n, |i, j| {
            self.get(inv.image0(i), inv.image0(j)).clone()
        }))
    }

    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(RMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn hadamard_pow(&self, d: u32) -> Self {
        RMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|a| num_traits::pow(a.clone(), d as usize))
                .collect(),
        }
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let (p, q) = (self.n, other.n);
        Self::from_fn(p * q, |i, j| {
            self.get(i / q, j / q) * other.get(i % q, j % q)
        })
    }

    /// Deletes the 0-based row/column `k`.
    pub fn delete_index(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        self.principal_submatrix(&keep)
    }

    /// Rows scaled to integers plus the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Rational) {
        let mut scale = Rational::one();
        let rows = self
            .rows()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
                scale *= Rational::from_integer(l.clone());
                r.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect();
        (rows, scale)
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Rational::from_integer(if negate { -det } else { det })
}

impl fmt::Display for RMatrix {
    /// The shared text format: `n <size>` followed by one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for RMatrix {
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
        if n == 0 {
            return Err(Error::Parse("matrix size must be positive".into()));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {n} rows")))?;
            let row = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {line:?} has {} entries, expected {n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing content {extra:?}")));
        }
        RMatrix::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, rat_frac};

    fn m6() -> RMatrix {
        RMatrix::from_i64(&[
            &[0, 13, -13, 9, 10, -19],
            &[12, 11, -11, 7, 8, -15],
            &[12, 11, -11, 7, 8, -15],
            &[6, 4, 5, 1, 2, -3],
            &[6, 4, 5, 1, 2, -3],
            &[6, 4, 5, 1, 2, -3],
        ])
    }

    fn cofactor_det(m: &RMatrix) -> Rational {
        let n = m.n();
        if n == 0 {
            return Rational::one();
        }
        (0..n)
            .map(|j| {
                let minor = RMatrix::from_fn(n - 1, |r, c| {
                    m.get(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let t = m.get(0, j) * cofactor_det(&minor);
                if j % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    #[test]
    fn principal_minor_examples() {
        let a = RMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.principal_minor(&IndexSet::full(2)).unwrap(), rat(-2));
        let m = m6();
        assert_eq!(
            m.principal_minor(&IndexSet::new(vec![1]).unwrap()).unwrap(),
            rat(0)
        );
        let full = m.principal_minor(&IndexSet::full(6)).unwrap();
        assert_eq!(full, cofactor_det(&m));
        assert_eq!(full, rat(0));
        assert!(matches!(
            m.principal_minor(&IndexSet::new(vec![7]).unwrap()),
            Err(Error::IndexOutOfRange { index: 7, n: 6 })
        ));
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let a = RMatrix::from_rows(vec![
            vec![rat_frac(1, 2), rat(3), rat(-1), rat(2)],
            vec![rat(0), rat_frac(-2, 3), rat(5), rat(1)],
            vec![rat(4), rat(1), rat(0), rat_frac(7, 5)],
            vec![rat(0), rat(0), rat(2), rat(3)],
        ])
        .unwrap();
        assert_eq!(a.determinant(), cofactor_det(&a));
    }

    #[test]
    fn permutation_similarity_examples() {
        let a = RMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let p = Permutation::from_images(&[2, 1]).unwrap();
        assert_eq!(
            a.permutation_similarity(&p).unwrap(),
            RMatrix::from_i64(&[&[4, 3], &[2, 1]])
        );
        assert_eq!(
            a.permutation_similarity(&Permutation::identity(2)).unwrap(),
            a
        );
        let tau4 = RMatrix::from_fn(4, |i, j| if i > j { rat(1) } else { rat(0) });
        let p = Permutation::from_images(&[1, 4, 2, 3]).unwrap();
        assert_eq!(
            tau4.permutation_similarity(&p).unwrap(),
            RMatrix::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 1], &[1, 1, 0, 1], &[1, 0, 0, 0]])
        );
        assert!(a.permutation_similarity(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn hadamard_and_kronecker() {
        let a = RMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let ones = RMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.hadamard(&ones).unwrap(), a);
        assert_eq!(a.hadamard_pow(2), RMatrix::from_i64(&[&[1, 4], &[9, 16]]));
        assert!(a.hadamard(&RMatrix::identity(3)).is_err());
        assert_eq!(a.kronecker(&RMatrix::from_i64(&[&[1]])), a);
        let n = RMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            n.kronecker(&ones),
            RMatrix::from_i64(&[&[0, 0, 1, 1], &[0, 0, 1, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]])
        );
    }

    #[test]
    fn rank_and_nilpotency() {
        assert_eq!(RMatrix::zeros(3).rank(), 0);
        assert_eq!(RMatrix::identity(4).rank(), 4);
        assert_eq!(m6().rank(), 3);
        assert!(m6().is_nilpotent());
        assert!(!RMatrix::identity(2).is_nilpotent());
        let upper = RMatrix::from_i64(&[&[0, 5, 7], &[0, 0, -2], &[0, 0, 0]]);
        assert!(upper.is_nilpotent());
        assert_eq!(upper.rank(), 2);
    }

    #[test]
    fn text_format_round_trip() {
        let a = RMatrix::from_rows(vec![
            vec![rat_frac(-1, 2), rat(3)],
            vec![rat(0), rat_frac(5, 7)],
        ])
        .unwrap();
        let text = a.to_string();
        assert_eq!(text, "n 2\n-1/2 3\n0 5/7\n");
        assert_eq!(text.parse::<RMatrix>().unwrap(), a);
        assert!("n 2\n1 2\n3\n".parse::<RMatrix>().is_err());
        assert!("2\n1 2\n3 4\n".parse::<RMatrix>().is_err());
        assert!("n 1\n1/0\n".parse::<RMatrix>().is_err());
    }
}
