use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Exponent vector ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl std::borrow::Borrow<[u32]> for Monomial {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

/// Products and sums of integers skip the gcd normalisation.
fn fast_mul(a: &Rational, b: &Rational) -> Rational {
    if a.denom().is_one() && b.denom().is_one() {
        Rational::new_raw(a.numer() * b.numer(), BigInt::one())
    } else {
        a * b
    }
}

fn fast_add_assign(a: &mut Rational, b: &Rational) {
    if a.denom().is_one() && b.denom().is_one() {
        *a = Rational::new_raw(a.numer() + b.numer(), BigInt::one());
    } else {
        *a += b;
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `nvars` variables with rational coefficients.
///
/// No zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(e), Rational::one());
        p
    }

    /// `Σ c_i x_{i+1}`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.0.len() != nvars {
                return Err(Error::SizeMismatch {
                    expected: nvars,
                    got: m.0.len(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    fn check(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::SizeMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Product, or `None` when `|self|·|other|` exceeds `work_limit`.
    pub fn mul_bounded(&self, other: &MPoly, work_limit: usize) -> Option<MPoly> {
        assert_eq!(self.nvars, other.nvars);
        if self.len().saturating_mul(other.len()) > work_limit {
            return None;
        }
        Some(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len().max(other.len()) * 4);
        let mut buf = vec![0u32; self.nvars];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                for ((b, x), y) in buf.iter_mut().zip(&ma.0).zip(&mb.0) {
                    *b = x + y;
                }
                let prod = fast_mul(ca, cb);
                match acc.get_mut(buf.as_slice()) {
                    Some(c) => fast_add_assign(c, &prod),
                    None => {
                        acc.insert(Monomial(buf.clone()), prod);
                    }
                }
            }
        }
        MPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Binary exponentiation.
    pub fn pow(&self, e: u32) -> MPoly {
        self.pow_bounded(e, usize::MAX).expect("unbounded")
    }

    pub fn pow_bounded(&self, mut e: u32, work_limit: usize) -> Option<MPoly> {
        let mut result = MPoly::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_bounded(&base, work_limit)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_bounded(&base, work_limit)?;
            }
        }
        Some(result)
    }

    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[var] -= 1;
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.nvars {
            return Err(Error::SizeMismatch {
                expected: self.nvars,
                got: x.len(),
            });
        }
        let mut powers: Vec<Vec<Rational>> =
            x.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &x[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Substitutes `subs[i]` (all in a common ring) for `x_{i+1}`.
    pub fn substitute(&self, subs: &[MPoly]) -> Result<MPoly> {
        self.substitute_bounded(subs, usize::MAX)
            .ok_or_else(|| Error::TooLarge("substitution".into()))?
    }

    pub(crate) fn substitute_bounded(
        &self,
        subs: &[MPoly],
        work_limit: usize,
    ) -> Option<Result<MPoly>> {
        if subs.len() != self.nvars {
            return Some(Err(Error::SizeMismatch {
                expected: self.nvars,
                got: subs.len(),
            }));
        }
        let target = match subs.first() {
            Some(s) => s.nvars,
            None => return Some(Ok(MPoly::constant(0, self.constant_term()))),
        };
        if subs.iter().any(|s| s.nvars != target) {
            return Some(Err(Error::Invariant(
                "substituted polynomials live in different rings".into(),
            )));
        }
        let mut powers: Vec<Vec<MPoly>> = subs
            .iter()
            .map(|s| vec![MPoly::one(target), s.clone()])
            .collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul_bounded(&subs[i], work_limit)?;
                    pw.push(next);
                }
                t = t.mul_bounded(&pw[e as usize], work_limit)?;
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Some(Ok(out))
    }

    /// Positive rational `c` with `self = c · p`, `p` having coprime integer
    /// coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Primitive part with positive leading coefficient, and the factor `c`
    /// with `self = c · primitive`.
    pub fn normalized(&self) -> (MPoly, Rational) {
        if self.is_zero() {
            return (self.clone(), Rational::one());
        }
        let mut c = self.content();
        if self
            .leading_term()
            .map(|(_, v)| v.is_negative())
            .unwrap_or(false)
        {
            c = -c;
        }
        (self.scale(&c.recip()), c)
    }

    /// Re-embeds into a ring with more variables: variable `i` becomes `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl Ord for MPoly {
    /// Compares term by term from the leading term down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| {
            let mut a = self.terms.iter().rev();
            let mut b = other.terms.iter().rev();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((ma, ca)), Some((mb, cb))) => {
                        let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for MPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Operator impls panic on a ring mismatch; the `try_*` methods report it.
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.try_add(rhs).expect("nvars mismatch")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.try_add(&-rhs).expect("nvars mismatch")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.try_mul(rhs).expect("nvars mismatch")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
