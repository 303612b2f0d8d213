mod common;

use common::*;
use jacmap::fixtures;
use jacmap::goodpair::Phi;
use jacmap::mpoly::{jacobian_det, jacobian_matrix, parse_machine_line, parse_polymap};
use jacmap::{MPoly, PolyMap};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(
        (p, q, r) in (1usize..=4).prop_flat_map(|n| (poly(n, 4, 5), poly(n, 4, 5), poly(n, 4, 5)))
    ) {
        let n = p.nvars();
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p + &(-&p), MPoly::zero(n));
        prop_assert_eq!(&p * &MPoly::one(n), p.clone());
        prop_assert_eq!(p.pow(3), &(&p * &p) * &p);
    }

    #[test]
    fn evaluation_is_a_ring_map(
        (p, q, x) in (1usize..=4).prop_flat_map(|n| (poly(n, 3, 5), poly(n, 3, 5), point(n)))
    ) {
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), p.eval(&x).unwrap() * q.eval(&x).unwrap());
        prop_assert_eq!((&p - &q).eval(&x).unwrap(), p.eval(&x).unwrap() - q.eval(&x).unwrap());
    }

    #[test]
    fn machine_format_round_trips(p in (1usize..=4).prop_flat_map(|n| poly(n, 4, 6))) {
        prop_assert_eq!(parse_machine_line(&p.to_machine(), p.nvars()).unwrap(), p);
    }

    #[test]
    fn composition_is_associative(
        (f, g, h) in (1usize..=3).prop_flat_map(|n| (polymap(n, 2, 3), polymap(n, 2, 3), polymap(n, 2, 3)))
    ) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(parse_polymap(&left.to_machine()).unwrap(), left);
    }

    #[test]
    fn chain_rule_at_points(
        (f, g, x) in (1usize..=3).prop_flat_map(|n| (polymap(n, 2, 3), polymap(n, 2, 3), point(n)))
    ) {
        let gx = g.eval(&x).unwrap();
        let lhs = jacobian_det(&f.compose(&g).unwrap()).eval(&x).unwrap();
        let rhs = jacobian_det(&f).eval(&gx).unwrap() * jacobian_det(&g).eval(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobian_matrix_entries_are_partials(f in (1usize..=3).prop_flat_map(|n| polymap(n, 3, 4))) {
        let jm = jacobian_matrix(&f);
        for (i, row) in jm.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                prop_assert_eq!(e, &f.components()[i].derivative(j));
            }
        }
    }
}

#[test]
fn good_pair_fixtures_have_unit_jacobian() {
    let mut checked = 0;
    for r in fixtures::catalog().unwrap() {
        let Phi::Pow(d) = r.phi else { continue };
        if !r.good {
            continue;
        }
        let a = fixtures::matrix(&r.name).unwrap();
        // The symbolic determinant grows quickly with n and d.
        if a.n() > 6 || (a.n() > 4 && d > 2) {
            continue;
        }
        assert_eq!(
            jacobian_det(&PolyMap::power_map(&a, d)),
            MPoly::one(a.n()),
            "{}",
            r.name
        );
        checked += 1;
    }
    assert!(checked >= 10, "only {checked} fixtures checked");
}

#[test]
fn non_good_map_has_nonconstant_jacobian() {
    let a = fixtures::matrix("identity_dim2").unwrap();
    assert!(!jacobian_det(&PolyMap::power_map(&a, 2)).is_constant());
}
