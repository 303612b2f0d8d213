use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ordered_form, Partition, UniversalSpec};
use crate::error::Result;
use crate::exactalg::{rat, strict_triangularization, Permutation, RMatrix, Rational};

/// `m×m` strictly lower triangular matrix of ones; `τ_1 = [0]`.
pub fn tau(m: usize) -> RMatrix {
    RMatrix::from_fn(m, |i, j| {
        if i > j {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `η = Π τ_m Πᵀ`.
pub fn eta(m: usize, perm: &Permutation) -> Result<RMatrix> {
    tau(m).permutation_similarity(perm)
}

/// `m·n − m(m+1)/2`.
pub fn parameter_count(p: &Partition) -> usize {
    let (m, n) = (p.len(), p.n());
    m * n - m * (m + 1) / 2
}

/// Number of parameters `build_universal` actually reads from `spec`.
pub fn free_parameter_count(spec: &UniversalSpec) -> Result<usize> {
    let m = spec.partition.len();
    let e = eta(m, &spec.perm)?;
    let parts = spec.partition.parts();
    let mut count = 0;
    for j in 0..m {
        for k in 0..m {
            count += if e.get(j, k).is_one() {
                parts[k]
            } else {
                parts[k] - 1
            };
        }
    }
    Ok(count)
}

/// Assembles `U(p, Π)`: block `(j,k)` is of type S (every row `a^{(j,k)}`)
/// where `η_{jk} = 1`, and of type Z (last entry replaced by minus the sum
/// of the others) where `η_{jk} = 0`.
pub fn build_universal(spec: &UniversalSpec) -> Result<RMatrix> {
    spec.validate()?;
    let m = spec.partition.len();
    let e = eta(m, &spec.perm)?;
    let offs = spec.partition.offsets();
    let n = spec.partition.n();
    let mut u = RMatrix::zeros(n);
    for j in 0..m {
        for k in 0..m {
            let mut row = spec.block(j, k).to_vec();
            if e.get(j, k).is_zero() {
                let last = row.len() - 1;
                let s = row[..last].iter().fold(Rational::zero(), |s, v| s + v);
                row[last] = -s;
            }
            for r in offs[j]..offs[j + 1] {
                for (c, v) in row.iter().enumerate() {
                    u.set(r, offs[k] + c, v.clone());
                }
            }
        }
    }
    Ok(u)
}

/// Recovers a `(p, Π, a)` description of a universal matrix, such that
/// `build_universal` reproduces its ordered form. `None` if not universal.
///
/// Π is one valid choice; it is not unique when `S(A)` has zero entries.
pub fn decompose(a: &RMatrix) -> Option<UniversalSpec> {
    if a.n() == 0 {
        return None;
    }
    let of = ordered_form(a);
    let offs = of.partition.offsets();
    let m = of.partition.len();
    let s = RMatrix::from_fn(m, |j, k| {
        of.matrix.row(offs[j])[offs[k]..offs[k + 1]]
            .iter()
            .fold(Rational::zero(), |s, v| s + v)
    });
    let sigma = strict_triangularization(&s)?;
    // S is supported where σ(j) < σ(k), and η_{jk} = τ_{π⁻¹(j), π⁻¹(k)}
    // must be 1 there, so π⁻¹(j) = m + 1 − σ(j).
    let images: Vec<usize> = (1..=m).map(|j| m + 1 - sigma.apply(j)).collect();
    let perm = Permutation::from_images(&images).ok()?.inverse();
    let mut params = Vec::with_capacity(m * m);
    for j in 0..m {
        for k in 0..m {
            params.push(of.matrix.row(offs[j])[offs[k]..offs[k + 1]].to_vec());
        }
    }
    UniversalSpec::new(of.partition, perm, params).ok()
}

/// Uniformly random permutation of `m` elements.
pub fn random_permutation<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (1..=m).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffled identity")
}

/// Random parameters in `[-9, 9]`. Resamples so that every S block has a
/// nonzero row sum and no Z block is identically zero; degenerate draws can
/// lower the Newton order below the rank.
pub fn random_spec<R: Rng + ?Sized>(
    p: &Partition,
    perm: &Permutation,
    rng: &mut R,
) -> Result<UniversalSpec> {
    let m = p.len();
    let e = eta(m, perm)?;
    let mut params = Vec::with_capacity(m * m);
    for j in 0..m {
        for &pk in p.parts() {
            let k = params.len() % m;
            let s_block = e.get(j, k).is_one();
            let v = loop {
                let v: Vec<i64> = (0..pk).map(|_| rng.random_range(-9..=9)).collect();
                let ok = if s_block {
                    v.iter().sum::<i64>() != 0
                } else {
                    pk == 1 || v[..pk - 1].iter().any(|&x| x != 0)
                };
                if ok {
                    break v;
                }
            };
            params.push(v.into_iter().map(rat).collect());
        }
    }
    UniversalSpec::new(p.clone(), perm.clone(), params)
}

/// Deterministic sample of `U(p, Π)` for a given seed.
pub fn random_universal(p: &Partition, perm: &Permutation, seed: u64) -> Result<RMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build_universal(&random_spec(p, perm, &mut rng)?)
}

/// Repeatedly deletes index `j` (row and column) while row `j` or column `j`
/// is zero, lowest index first. May return the `0×0` matrix.
pub fn reduce_trivial(a: &RMatrix) -> RMatrix {
    let mut cur = a.clone();
    loop {
        let n = cur.n();
        let hit = (0..n).find(|&j| {
            cur.row(j).iter().all(Zero::is_zero) || (0..n).all(|i| cur.get(i, j).is_zero())
        });
        match hit {
            Some(j) => cur = cur.delete_index(j),
            None => return cur,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universal::is_universal;

    fn spec(parts: &[usize], perm: &[usize], params: &[&[i64]]) -> UniversalSpec {
        UniversalSpec::new(
            Partition::new(parts.to_vec()).unwrap(),
            Permutation::from_images(perm).unwrap(),
            params
                .iter()
                .map(|v| v.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn tau_and_eta() {
        assert_eq!(tau(1), RMatrix::zeros(1));
        let e = eta(4, &Permutation::from_images(&[1, 4, 2, 3]).unwrap()).unwrap();
        assert_eq!(
            e,
            RMatrix::from_i64(&[&[0, 0, 0, 0], &[1, 0, 0, 1], &[1, 1, 0, 1], &[1, 0, 0, 0]])
        );
    }

    #[test]
    fn single_z_block() {
        let u = build_universal(&spec(&[2], &[1], &[&[5, 0]])).unwrap();
        assert_eq!(u, RMatrix::from_i64(&[&[5, -5], &[5, -5]]));
        let u = build_universal(&spec(&[4], &[1], &[&[1, 2, 3, 100]])).unwrap();
        assert_eq!(u.row(3), &[rat(1), rat(2), rat(3), rat(-6)]);
    }

    #[test]
    fn dim5_family_shape() {
        // a=2, b=3, c=-1, s=4, t=5, u=6, v=7
        let u = build_universal(&spec(
            &[2, 3],
            &[1, 2],
            &[&[2, 0], &[3, -1, 0], &[4, 5], &[6, 7, 0]],
        ))
        .unwrap();
        let want = RMatrix::from_i64(&[
            &[2, -2, 3, -1, -2],
            &[2, -2, 3, -1, -2],
            &[4, 5, 6, 7, -13],
            &[4, 5, 6, 7, -13],
            &[4, 5, 6, 7, -13],
        ]);
        assert_eq!(u, want);
        assert!(is_universal(&u));
        assert_eq!(u.rank(), 2);
    }

    #[test]
    fn parameter_counts() {
        assert_eq!(parameter_count(&Partition::new(vec![5]).unwrap()), 4);
        assert_eq!(parameter_count(&Partition::new(vec![1, 2, 3]).unwrap()), 12);
        assert_eq!(parameter_count(&Partition::new(vec![1; 5]).unwrap()), 10);
        for n in 1..=6 {
            for p in Partition::all(n) {
                let s = random_spec(
                    &p,
                    &Permutation::identity(p.len()),
                    &mut ChaCha8Rng::seed_from_u64(1),
                )
                .unwrap();
                assert_eq!(free_parameter_count(&s).unwrap(), parameter_count(&p));
            }
        }
    }

    #[test]
    fn random_is_deterministic_and_universal() {
        let p = Partition::new(vec![2, 2]).unwrap();
        let id = Permutation::identity(2);
        let a = random_universal(&p, &id, 7).unwrap();
        assert_eq!(a, random_universal(&p, &id, 7).unwrap());
        assert!(is_universal(&a));
        assert!(is_universal(&a.scale(&rat(3))));
    }

    #[test]
    fn decompose_rebuilds_ordered_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in Partition::all(6) {
            let perm = random_permutation(p.len(), &mut rng);
            let u = build_universal(&random_spec(&p, &perm, &mut rng).unwrap()).unwrap();
            let spec = decompose(&u).unwrap();
            assert_eq!(build_universal(&spec).unwrap(), ordered_form(&u).matrix);
        }
        assert!(decompose(&RMatrix::identity(2)).is_none());
    }

    #[test]
    fn trivial_reduction() {
        let upper = RMatrix::from_i64(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
        assert_eq!(reduce_trivial(&upper).n(), 0);
        assert_eq!(
            reduce_trivial(&RMatrix::from_i64(&[&[0, 4], &[0, 0]])).n(),
            0
        );
        let z = RMatrix::from_i64(&[&[3, -3], &[3, -3]]);
        assert_eq!(reduce_trivial(&z), z);
    }
}
