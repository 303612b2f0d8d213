#![allow(dead_code)]

use jacmap::exactalg::rat_frac;
use jacmap::{MPoly, Monomial, PolyMap, RMatrix, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| rat_frac(p, q))
}

pub fn matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = RMatrix> {
    prop::collection::vec(lo..=hi, n * n)
        .prop_map(move |v| RMatrix::from_fn(n, |i, j| Rational::from_integer(v[i * n + j].into())))
}

pub fn any_matrix(max_n: usize) -> impl Strategy<Value = RMatrix> {
    (1..=max_n).prop_flat_map(|n| matrix(n, -5, 5))
}

/// Mostly-zero matrices, so that nilpotent ones show up often.
pub fn sparse_matrix(max_n: usize) -> impl Strategy<Value = RMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => -3i64..=3], n * n).prop_map(
            move |v| RMatrix::from_fn(n, |i, j| Rational::from_integer(v[i * n + j].into())),
        )
    })
}

pub fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), rational()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            if e.iter().sum::<u32>() <= max_deg {
                p.add_term(Monomial(e), c);
            }
        }
        p
    })
}

pub fn polymap(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = PolyMap> {
    prop::collection::vec(poly(n, max_deg, max_terms), n).prop_map(|c| PolyMap::new(c).unwrap())
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter()
        .map(|&x| Rational::from_integer(x.into()))
        .collect()
}
