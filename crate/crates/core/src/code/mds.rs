//! MDS test for a systematic generator `(I_k | A)`: the code is MDS iff every
//! square submatrix of `A` is nonsingular.

use crate::field::Elem;
use crate::matrix::{det_in_place, FqMatrix};

/// Advances `idx` to the next `len`-subset of `0..n` in lexicographic order.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    for i in (0..s).rev() {
        if idx[i] < n - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn all_minors_nonsingular(a: &FqMatrix) -> bool {
    let f = a.field();
    let (r, c) = (a.rows(), a.cols());
    let mut buf: Vec<Elem> = Vec::new();
    for size in 1..=r.min(c) {
        let mut rows: Vec<usize> = (0..size).collect();
        loop {
            let mut cols: Vec<usize> = (0..size).collect();
            loop {
                buf.clear();
                for &i in &rows {
                    buf.extend(cols.iter().map(|&j| a.get(i, j)));
                }
                if det_in_place(f, &mut buf, size) == 0 {
                    return false;
                }
                if !next_subset(&mut cols, c) {
                    break;
                }
            }
            if !next_subset(&mut rows, r) {
                break;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn subsets_enumerate_binomially() {
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_subset(&mut idx, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }

    #[test]
    fn minors() {
        let f = PrimeField::new(5).unwrap();
        assert!(all_minors_nonsingular(&FqMatrix::from_rows(f, &[[2]]).unwrap()));
        assert!(!all_minors_nonsingular(&FqMatrix::scalar(f, 2, 2)));
        // all entries nonzero but determinant 1*4 - 2*2 = 0
        let m = FqMatrix::from_rows(f, &[[1, 2], [2, 4]]).unwrap();
        assert!(!all_minors_nonsingular(&m));
    }
}
