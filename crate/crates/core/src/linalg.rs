//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in place
/// and returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    rref(&mut rows.to_vec(), cols).len()
}

/// A basis of `{x : rows * x = 0}`, one vector per free column, in column order.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut reduced = rows.to_vec();
    let pivots = rref(&mut reduced, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[row][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_cases() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&m, 3), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        assert_eq!(nullspace(&mat(&[&[1, 0], &[0, 1]]), 2).len(), 0);
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_annihilated(entries in prop::collection::vec(-3i64..4, 12)) {
            let m: Vec<Vec<Rational>> = entries.chunks(4).map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            let ns = nullspace(&m, 4);
            prop_assert_eq!(ns.len() + rank(&m, 4), 4);
            for v in ns {
                for row in &m {
                    let dot: Rational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
