use std::fmt;

use crate::error::{Error, Result};

/// Integer partition `p_1 ≤ … ≤ p_m` of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Invariant("partition has no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Invariant("partition part is zero".into()));
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invariant(format!(
                "partition {parts:?} is not ascending"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `m`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 0-based index of the first row of each block, plus `n` at the end.
    pub fn offsets(&self) -> Vec<usize> {
        let mut o = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        o.push(0);
        for p in &self.parts {
            acc += p;
            o.push(acc);
        }
        o
    }

    /// Every ascending partition of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in min..=rest {
                if rest - p != 0 && rest - p < p {
                    continue;
                }
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, 1, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_partition_numbers() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        for p in Partition::all(6) {
            assert_eq!(p.n(), 6);
            assert!(Partition::new(p.parts().to_vec()).is_ok());
        }
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![0, 2]).is_err());
        assert!(Partition::new(vec![3, 1]).is_err());
        assert_eq!(
            Partition::new(vec![1, 2, 3]).unwrap().offsets(),
            vec![0, 1, 3, 6]
        );
    }
}
