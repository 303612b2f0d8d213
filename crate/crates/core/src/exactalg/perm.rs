use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, m}` stored as its image list, `j ↦ α_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// Builds `(α_1 … α_m)` from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &a in images {
            if a == 0 || a > m || seen[a - 1] {
                return Err(Error::Invariant(format!(
                    "{images:?} is not a permutation of 1..={m}"
                )));
            }
            seen[a - 1] = true;
            out.push(a - 1);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 1-based image of the 1-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    pub(crate) fn image0(&self, j: usize) -> usize {
        self.images[j]
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&a| a + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (j, &a) in self.images.iter().enumerate() {
            inv[a] = j;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &a)| i == a)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs = self.images();
        if imgs.len() < 10 {
            let s: String = imgs.iter().map(|a| a.to_string()).collect();
            write!(f, "({s})")
        } else {
            let s: Vec<String> = imgs.iter().map(|a| a.to_string()).collect();
            write!(f, "({})", s.join(" "))
        }
    }
}

/// A strictly increasing list of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invariant(format!("repeated index in {indices:?}")));
        }
        if indices.first() == Some(&0) {
            return Err(Error::IndexOutOfRange { index: 0, n: 0 });
        }
        Ok(IndexSet(indices))
    }

    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    /// Index set of the bits in `mask`, bit `j` standing for index `j + 1`.
    pub fn from_mask(mask: u64) -> Self {
        IndexSet(
            (0..64)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect(),
        )
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[3, 1]).is_err());
    }

    #[test]
    fn inverse_and_compose() {
        let p = Permutation::from_images(&[1, 4, 2, 3]).unwrap();
        assert_eq!(p.apply(2), 4);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.to_string(), "(1423)");
    }

    #[test]
    fn index_sets() {
        assert_eq!(IndexSet::from_mask(0b101).indices(), &[1, 3]);
        assert!(IndexSet::new(vec![2, 2]).is_err());
        assert_eq!(IndexSet::new(vec![3, 1]).unwrap().indices(), &[1, 3]);
    }
}
