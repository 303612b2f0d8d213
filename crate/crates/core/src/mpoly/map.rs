use super::MPoly;
use crate::error::{Error, Result};
use crate::exactalg::{RMatrix, Rational};

/// Polynomial self-map of `n`-space, `x ↦ (f_1(x), …, f_n(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    components: Vec<MPoly>,
}

impl PolyMap {
    pub fn new(components: Vec<MPoly>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|c| c.nvars() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                got: bad.nvars(),
            });
        }
        Ok(PolyMap { components })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            components: (0..n).map(|i| MPoly::var(n, i)).collect(),
        }
    }

    /// `x ↦ Ax`.
    pub fn linear(a: &RMatrix) -> Self {
        PolyMap {
            components: a.rows().map(MPoly::linear).collect(),
        }
    }

    /// `x ↦ x + (Ax)^d`, the power taken coordinatewise.
    pub fn power_map(a: &RMatrix, d: u32) -> Self {
        let n = a.n();
        let components = a
            .rows()
            .enumerate()
            .map(|(j, row)| &MPoly::var(n, j) + &MPoly::linear(row).pow(d))
            .collect();
        PolyMap { components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MPoly] {
        &self.components
    }

    pub fn into_components(self) -> Vec<MPoly> {
        self.components
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(self.dim())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &PolyMap) -> Result<PolyMap> {
        if self.dim() != g.dim() {
            return Err(Error::SizeMismatch {
                expected: self.dim(),
                got: g.dim(),
            });
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&g.components))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap { components })
    }

    /// As [`compose`](Self::compose), `None` if a single product would need
    /// more than `work_limit` term multiplications.
    pub fn compose_bounded(&self, g: &PolyMap, work_limit: usize) -> Option<Result<PolyMap>> {
        if self.dim() != g.dim() {
            return Some(Err(Error::SizeMismatch {
                expected: self.dim(),
                got: g.dim(),
            }));
        }
        let mut components = Vec::with_capacity(self.dim());
        for c in &self.components {
            match c.substitute_bounded(&g.components, work_limit)? {
                Ok(p) => components.push(p),
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(PolyMap { components }))
    }

    pub fn eval(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    /// Total number of stored terms over all components.
    pub fn term_count(&self) -> usize {
        self.components.iter().map(MPoly::len).sum()
    }

    pub fn max_degree(&self) -> u32 {
        self.components
            .iter()
            .filter_map(MPoly::total_degree)
            .max()
            .unwrap_or(0)
    }
}
