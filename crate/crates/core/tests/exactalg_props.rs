mod common;

use common::*;
use jacmap::exactalg::{strict_triangularization, vandermonde_kernel, vandermonde_type};
use jacmap::{Permutation, RMatrix, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect())
        .collect()
}

/// Largest `k` with a nonzero `k × k` minor, by brute force.
fn minor_rank(a: &RMatrix) -> usize {
    let n = a.n();
    (1..=n)
        .rev()
        .find(|&k| {
            let sets = subsets(n, k);
            sets.iter().any(|rows| {
                sets.iter().any(|cols| {
                    let sub = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| a.get(i, j).clone()).collect())
                        .collect();
                    !RMatrix::from_rows(sub).unwrap().determinant().is_zero()
                })
            })
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn principal_minor_multiset_is_similarity_invariant(
        (a, p) in (1usize..=5).prop_flat_map(|n| (matrix(n, -4, 4), permutation(n)))
    ) {
        let b = a.permutation_similarity(&p).unwrap();
        prop_assert_eq!(sorted(a.all_principal_minors()), sorted(b.all_principal_minors()));
        prop_assert_eq!(a.permutation_similarity(&p).unwrap().permutation_similarity(&p.inverse()).unwrap(), a);
    }

    #[test]
    fn triangularization_iff_all_principal_minors_vanish(a in sparse_matrix(10)) {
        let exhaustive = a.all_principal_minors().iter().skip(1).all(Zero::is_zero);
        match strict_triangularization(&a) {
            Some(p) => {
                prop_assert!(exhaustive);
                let t = a.permutation_similarity(&p).unwrap();
                for i in 0..t.n() {
                    for j in 0..=i {
                        prop_assert!(t.get(i, j).is_zero());
                    }
                }
            }
            None => prop_assert!(!exhaustive),
        }
    }

    #[test]
    fn kronecker_factors_commute_up_to_perfect_shuffle(
        (a, b) in (1usize..=4, 1usize..=2).prop_flat_map(|(na, nb)| (matrix(na, -3, 3), matrix(nb, -3, 3)))
    ) {
        let (na, nb) = (a.n(), b.n());
        let images: Vec<usize> = (0..na * nb).map(|idx| (idx % nb) * na + idx / nb + 1).collect();
        let shuffle = Permutation::from_images(&images).unwrap();
        prop_assert_eq!(a.kronecker(&b).permutation_similarity(&shuffle).unwrap(), b.kronecker(&a));
    }

    #[test]
    fn rank_matches_minor_rank(a in (1usize..=5).prop_flat_map(|n| sparse_matrix(n).prop_filter("size", move |m| m.n() == n))) {
        prop_assert_eq!(a.rank(), minor_rank(&a));
    }

    #[test]
    fn low_rank_products_match_minor_rank(
        (u, v) in (2usize..=5).prop_flat_map(|n| (matrix(n, -3, 3), matrix(n, -3, 3)))
    ) {
        // Zero the last columns of u so the product has lower rank.
        let n = u.n();
        let u = RMatrix::from_fn(n, |i, j| if j + 2 > n { Rational::zero() } else { u.get(i, j).clone() });
        let a = u.mul(&v).unwrap();
        prop_assert_eq!(a.rank(), minor_rank(&a));
    }

    #[test]
    fn vandermonde_kernel_annihilates(v in prop::collection::vec(-3i64..=3, 1..=6)) {
        let v = ints(&v);
        let vt = vandermonde_type(&v).transpose();
        let kernel = vandermonde_kernel(&v);
        for w in &kernel {
            prop_assert!(vt.mul_vec(w).unwrap().iter().all(Zero::is_zero));
        }
        let mut distinct: Vec<&Rational> = v.iter().filter(|x| !x.is_zero()).collect();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(kernel.len(), v.len() - distinct.len());
        prop_assert_eq!(kernel.len(), v.len() - vt.rank());
    }
}
