//! Dense linear algebra over a number field.

use alloc::vec::Vec;

use super::AlgebraicNumber;

/// A basis of the right nullspace `{v : A v = 0}` of an `m x n` matrix with
/// `n = ncols`, computed by Gauss-Jordan elimination.
pub fn nullspace(mut rows: Vec<Vec<AlgebraicNumber>>, ncols: usize, zero: &AlgebraicNumber) -> Vec<Vec<AlgebraicNumber>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (pivot_row, other) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, y) in other.iter_mut().zip(pivot_row) {
                *x = &*x - &(&f * y);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v: Vec<AlgebraicNumber> = (0..ncols).map(|_| zero.clone()).collect();
        v[free] = zero.one_like();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&rows[i][free];
        }
        basis.push(v);
    }
    basis
}

/// Rank of a matrix (row count of an echelon form).
pub fn rank(rows: Vec<Vec<AlgebraicNumber>>, ncols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let zero = rows[0][0].zero_like();
    ncols - nullspace(rows, ncols, &zero).len()
}
