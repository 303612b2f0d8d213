use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::Partition;
use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, Permutation, Rational};

/// Partition, permutation and block parameter vectors defining `U(p, Π)`.
///
/// `params[j * m + k]` is the vector `a^{(j,k)}` of length `p_k`. For blocks
/// of type Z the last coordinate is ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalSpec {
    pub partition: Partition,
    pub perm: Permutation,
    pub params: Vec<Vec<Rational>>,
}

impl UniversalSpec {
    pub fn new(
        partition: Partition,
        perm: Permutation,
        params: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let spec = UniversalSpec {
            partition,
            perm,
            params,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.partition.len();
        if self.perm.len() != m {
            return Err(Error::Invariant(format!(
                "permutation acts on {} elements but the partition has {m} parts",
                self.perm.len()
            )));
        }
        if self.params.len() != m * m {
            return Err(Error::Invariant(format!(
                "expected {} parameter vectors, got {}",
                m * m,
                self.params.len()
            )));
        }
        let parts = self.partition.parts();
        for (idx, v) in self.params.iter().enumerate() {
            let (j, k) = (idx / m, idx % m);
            if v.len() != parts[k] {
                return Err(Error::Invariant(format!(
                    "block ({},{}) needs {} parameters, got {}",
                    j + 1,
                    k + 1,
                    parts[k],
                    v.len()
                )));
            }
        }
        Ok(())
    }

    pub fn block(&self, j: usize, k: usize) -> &[Rational] {
        &self.params[j * self.partition.len() + k]
    }
}

/// ```text
/// partition 1 2
/// perm 1 2
/// 0
/// 3 _
/// 5
/// 2 _
/// ```
/// One line per block `(j,k)` in row-major order. `_` stands for an ignored
/// coordinate and reads as zero.
impl FromStr for UniversalSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let mut header = |key: &str| -> Result<Vec<usize>> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing `{key}` line")))?;
            let mut tok = line.split_whitespace();
            if tok.next() != Some(key) {
                return Err(Error::Parse(format!("expected `{key} …`, got `{line}`")));
            }
            tok.map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer `{t}` in `{line}`")))
            })
            .collect()
        };
        let parts = header("partition")?;
        let images = header("perm")?;
        let params = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        if t == "_" {
                            Ok(Rational::zero())
                        } else {
                            parse_rational(t)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let partition = Partition::new(parts)?;
        let perm = Permutation::from_images(&images)?;
        UniversalSpec::new(partition, perm, params)
    }
}

impl fmt::Display for UniversalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "partition {}", join(self.partition.parts()))?;
        writeln!(f, "perm {}", join(&self.perm.images()))?;
        for v in &self.params {
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn text_round_trip() {
        let text = "partition 1 2\nperm 2 1\n0\n3 _\n5\n2 _\n";
        let spec: UniversalSpec = text.parse().unwrap();
        assert_eq!(spec.block(0, 1), &[rat(3), rat(0)]);
        let again: UniversalSpec = spec.to_string().parse().unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            "partition 0 2\nperm 1 2\n".parse::<UniversalSpec>(),
            Err(Error::Invariant(_))
        ));
        assert!(matches!(
            "partition 2\nperm 1\n1\n".parse::<UniversalSpec>(),
            Err(Error::Invariant(_))
        ));
        assert!(matches!(
            "partition 2\nperm 1\n1 x\n".parse::<UniversalSpec>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "perm 1\n".parse::<UniversalSpec>(),
            Err(Error::Parse(_))
        ));
    }
}
