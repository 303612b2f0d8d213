use num_traits::Signed;

use super::Partition;
use crate::exactalg::{all_principal_minors_vanish, Permutation, RMatrix, Rational};

/// Permutation-similar copy of a matrix with equal rows grouped into
/// adjacent blocks of ascending size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedForm {
    pub matrix: RMatrix,
    /// `matrix == original.permutation_similarity(applied_permutation)`.
    pub applied_permutation: Permutation,
    pub partition: Partition,
    /// Block number (0-based) of each row of `matrix`.
    pub block_index: Vec<usize>,
}

/// Groups of equal rows as 0-based original indices, in ordered-form order.
///
/// Blocks are sorted by (size, first occurrence). Inside a block rows are
/// sorted by (|diagonal entry|, index).
fn row_groups(a: &RMatrix) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..a.n() {
        match groups.iter_mut().find(|g| a.row(g[0]) == a.row(i)) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    groups.sort_by_key(|g| (g.len(), g[0]));
    for g in &mut groups {
        g.sort_by(|&x, &y| a.get(x, x).abs().cmp(&a.get(y, y).abs()).then(x.cmp(&y)));
    }
    groups
}

pub fn ordered_form(a: &RMatrix) -> OrderedForm {
    let groups = row_groups(a);
    let order: Vec<usize> = groups.iter().flatten().copied().collect();
    let mut images = vec![0; a.n()];
    for (new, &old) in order.iter().enumerate() {
        images[old] = new;
    }
    let perm = Permutation::from_zero_based(images);
    let matrix = a.permutation_similarity(&perm).expect("sizes agree");
    let block_index = groups
        .iter()
        .enumerate()
        .flat_map(|(b, g)| std::iter::repeat_n(b, g.len()))
        .collect();
    let partition = Partition::new(groups.iter().map(Vec::len).collect()).unwrap_or_else(|_| {
        // Only reachable for the empty matrix.
        Partition::new(vec![1]).expect("valid")
    });
    OrderedForm {
        matrix,
        applied_permutation: perm,
        partition,
        block_index,
    }
}

/// `S_{jk}`: sum of a representative row of block `j` over the columns of block `k`.
fn row_sums(a: &RMatrix, groups: &[Vec<usize>]) -> RMatrix {
    RMatrix::from_fn(groups.len(), |j, k| {
        let row = a.row(groups[j][0]);
        groups[k]
            .iter()
            .fold(Rational::default(), |s, &c| s + &row[c])
    })
}

/// The block row-sum matrix `S(A)` of the ordered form of `a`.
pub fn block_row_sum_matrix(a: &RMatrix) -> RMatrix {
    row_sums(a, &row_groups(a))
}

/// Universal iff every principal minor of `S(A)` vanishes. Works on the
/// row groups directly without permuting `a`.
pub fn is_universal(a: &RMatrix) -> bool {
    if a.n() == 0 {
        return true;
    }
    all_principal_minors_vanish(&row_sums(a, &row_groups(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unordered() -> RMatrix {
        RMatrix::from_i64(&[
            &[-3, 4, 2, 6, 5, 1],
            &[-15, 11, 8, 12, -11, 7],
            &[-3, 4, 2, 6, 5, 1],
            &[-19, 13, 10, 0, -13, 9],
            &[-15, 11, 8, 12, -11, 7],
            &[-3, 4, 2, 6, 5, 1],
        ])
    }

    fn ordered() -> RMatrix {
        RMatrix::from_i64(&[
            &[0, 13, -13, 9, 10, -19],
            &[12, 11, -11, 7, 8, -15],
            &[12, 11, -11, 7, 8, -15],
            &[6, 4, 5, 1, 2, -3],
            &[6, 4, 5, 1, 2, -3],
            &[6, 4, 5, 1, 2, -3],
        ])
    }

    #[test]
    fn reproduces_six_by_six_ordered_form() {
        let of = ordered_form(&unordered());
        assert_eq!(of.matrix, ordered());
        assert_eq!(of.partition.parts(), &[1, 2, 3]);
        assert_eq!(of.block_index, vec![0, 1, 1, 2, 2, 2]);
        assert_eq!(
            unordered()
                .permutation_similarity(&of.applied_permutation)
                .unwrap(),
            of.matrix
        );
    }

    #[test]
    fn s_matrix_of_ordered_example() {
        let s = block_row_sum_matrix(&ordered());
        assert_eq!(s, RMatrix::from_i64(&[&[0, 0, 0], &[12, 0, 0], &[6, 9, 0]]));
        assert!(is_universal(&ordered()));
        assert!(is_universal(&unordered()));
    }

    #[test]
    fn degenerate_groupings() {
        let a = RMatrix::from_i64(&[&[1, 2, -3], &[1, 2, -3], &[1, 2, -3]]);
        let of = ordered_form(&a);
        assert_eq!(of.partition.parts(), &[3]);
        assert_eq!(block_row_sum_matrix(&a), RMatrix::from_i64(&[&[0]]));
        let id = RMatrix::identity(2);
        assert_eq!(ordered_form(&id).partition.parts(), &[1, 1]);
        assert_eq!(block_row_sum_matrix(&id), id);
    }

    #[test]
    fn small_verdicts() {
        assert!(is_universal(&RMatrix::from_i64(&[&[7, -7], &[7, -7]])));
        assert!(!is_universal(&RMatrix::from_i64(&[&[0, 1], &[1, 0]])));
        assert!(is_universal(&RMatrix::zeros(3)));
    }
}
