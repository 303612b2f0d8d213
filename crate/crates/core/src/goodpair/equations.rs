use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::expansion::subset_expansion;
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::mpoly::{parse_machine_line, poly_det, MPoly, Monomial};

/// Generation is refused beyond `n ≤ 4`, `d ≤ 3`.
pub const EQUATION_GUARD: (usize, u32) = (4, 3);

/// Polynomial conditions on the entries `a_{11}, a_{12}, …, a_{nn}` for
/// `x + (Ax)^d` to have unit Jacobian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacEquationSystem {
    pub n: usize,
    pub d: u32,
    /// Primitive, positive leading coefficient, distinct, ascending graded-lex.
    pub equations: Vec<MPoly>,
    /// For each `x`-monomial of `J − 1`: its coefficient equals
    /// `factor · equations[index]`.
    pub sources: Vec<(Monomial, usize, Rational)>,
}

impl JacEquationSystem {
    pub fn max_degree(&self) -> u32 {
        self.equations
            .iter()
            .filter_map(MPoly::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Names `a11, a12, …` used for human-readable output.
    pub fn variable_names(&self) -> Vec<String> {
        let sep = if self.n >= 10 { "_" } else { "" };
        (1..=self.n)
            .flat_map(|j| (1..=self.n).map(move |k| format!("a{j}{sep}{k}")))
            .collect()
    }
}

/// Expands `J(A, ζ^d; x) − 1` over symbolic `a_{jk}` and `x_i`, splits it by
/// `x`-monomial, normalises each coefficient to its primitive part and
/// removes duplicates.
pub fn generate_jacobian_equations(n: usize, d: u32) -> Result<JacEquationSystem> {
    if n > EQUATION_GUARD.0 || d > EQUATION_GUARD.1 {
        return Err(Error::CostGuard(format!(
            "equation generation is limited to n ≤ {}, d ≤ {}; got n = {n}, d = {d}",
            EQUATION_GUARD.0, EQUATION_GUARD.1
        )));
    }
    if n == 0 || d < 2 {
        return Err(Error::Invariant("need n ≥ 1 and d ≥ 2".into()));
    }
    let na = n * n;
    let nv = na + n;
    let a = |j: usize, k: usize| MPoly::var(nv, j * n + k);
    let x = |i: usize| MPoly::var(nv, na + i);

    // Symbolic principal minors, computed in the a-variables only.
    let minors_a: Vec<MPoly> = (0usize..1 << n)
        .map(|mask| {
            let idx: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
            let sub: Vec<Vec<MPoly>> = idx
                .iter()
                .map(|&j| idx.iter().map(|&k| MPoly::var(na, j * n + k)).collect())
                .collect();
            poly_det(&sub, na)
        })
        .collect::<Result<_>>()?;
    let embed: Vec<usize> = (0..na).collect();

    let weights: Vec<MPoly> = (0..n)
        .map(|j| {
            let ell = (0..n).fold(MPoly::zero(nv), |s, k| &s + &(&a(j, k) * &x(k)));
            ell.pow(d - 1)
                .scale(&Rational::from_integer(BigInt::from(d)))
        })
        .collect();

    // Each symbolic minor multiplies a product of weights; the scalar-minor
    // expansion does the subset walk, so feed it unit minors and splice.
    let mut total = MPoly::zero(nv);
    for (mask, minor) in minors_a.iter().enumerate().skip(1) {
        if minor.is_zero() {
            continue;
        }
        let mut unit = vec![Rational::default(); 1 << n];
        unit[mask] = Rational::from_integer(BigInt::from(1));
        let prod = subset_expansion(&unit, &weights, None, nv)?;
        total = &total + &(&minor.embed(nv, &embed) * &prod);
    }

    let mut by_x: BTreeMap<Monomial, MPoly> = BTreeMap::new();
    for (m, c) in total.terms() {
        let xm = Monomial(m.0[na..].to_vec());
        let am = Monomial(m.0[..na].to_vec());
        by_x.entry(xm)
            .or_insert_with(|| MPoly::zero(na))
            .add_term(am, c.clone());
    }

    let mut normalized: Vec<(Monomial, MPoly, Rational)> = by_x
        .into_iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(xm, p)| {
            let (prim, c) = p.normalized();
            (xm, prim, c)
        })
        .collect();
    let mut equations: Vec<MPoly> = normalized.iter().map(|(_, p, _)| p.clone()).collect();
    equations.sort();
    equations.dedup();
    let sources = normalized
        .drain(..)
        .map(|(xm, p, c)| {
            let idx = equations.binary_search(&p).expect("present");
            (xm, idx, c)
        })
        .collect();
    Ok(JacEquationSystem {
        n,
        d,
        equations,
        sources,
    })
}

/// Header `n d count`, then one machine-format polynomial per line.
impl fmt::Display for JacEquationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.d, self.equations.len())?;
        for e in &self.equations {
            writeln!(f, "{}", e.to_machine())?;
        }
        Ok(())
    }
}

/// Reads the serialised form back. `sources` is not stored and comes back empty.
impl FromStr for JacEquationSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty equation system".into()))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let bad = || Error::Parse(format!("bad header `{header}`"));
        if h.len() != 3 {
            return Err(bad());
        }
        let n: usize = h[0].parse().map_err(|_| bad())?;
        let d: u32 = h[1].parse().map_err(|_| bad())?;
        let count: usize = h[2].parse().map_err(|_| bad())?;
        let equations = lines
            .map(|l| parse_machine_line(l, n * n))
            .collect::<Result<Vec<_>>>()?;
        if equations.len() != count {
            return Err(Error::Parse(format!(
                "header announces {count} equations, found {}",
                equations.len()
            )));
        }
        Ok(JacEquationSystem {
            n,
            d,
            equations,
            sources: Vec::new(),
        })
    }
}
