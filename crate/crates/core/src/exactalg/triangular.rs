use num_traits::Zero;

use super::matrix::RMatrix;
use super::perm::Permutation;

/// A permutation `π` making `Π A Πᵀ` strictly upper triangular, if one exists.
///
/// Repeatedly picks the lowest-indexed remaining column that is zero on the
/// remaining rows and gives it the next position.
pub fn strict_triangularization(a: &RMatrix) -> Option<Permutation> {
    let n = a.n();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut images = vec![0; n];
    for pos in 0..n {
        let slot = remaining
            .iter()
            .position(|&c| remaining.iter().all(|&r| a.get(r, c).is_zero()))?;
        let col = remaining.remove(slot);
        images[col] = pos;
    }
    Some(Permutation::from_zero_based(images))
}

/// Whether every principal minor of `a` vanishes.
pub fn all_principal_minors_vanish(a: &RMatrix) -> bool {
    strict_triangularization(a).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Permutation;

    fn is_strictly_upper(m: &RMatrix) -> bool {
        (0..m.n()).all(|i| (0..=i).all(|j| m.get(i, j).is_zero()))
    }

    #[test]
    fn lower_triangular_reverses() {
        let a = RMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let p = strict_triangularization(&a).unwrap();
        assert_eq!(p, Permutation::from_images(&[3, 2, 1]).unwrap());
        assert!(is_strictly_upper(&a.permutation_similarity(&p).unwrap()));
    }

    #[test]
    fn s_matrix_of_numeric_example() {
        let s = RMatrix::from_i64(&[&[0, 0, 0], &[12, 0, 0], &[6, 9, 0]]);
        let p = strict_triangularization(&s).unwrap();
        assert!(is_strictly_upper(&s.permutation_similarity(&p).unwrap()));
        assert!(all_principal_minors_vanish(&s));
    }

    #[test]
    fn failures() {
        assert!(strict_triangularization(&RMatrix::from_i64(&[&[0, 1], &[1, 0]])).is_none());
        assert!(!all_principal_minors_vanish(&RMatrix::identity(3)));
        assert!(all_principal_minors_vanish(&RMatrix::zeros(3)));
    }
}
