use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlgebraicNumber, Rational};
use crate::error::{Error, Result};

/// A Z-basis of the additive group generated by some field elements,
/// together with the integer coordinates of each input element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZBasis {
    pub basis: Vec<AlgebraicNumber>,
    /// `coords[i][j]` is the coefficient of `basis[j]` in input element `i`.
    pub coords: Vec<Vec<BigInt>>,
}

/// Z-basis of the subgroup of `(K, +)` generated by `elements`.
///
/// Coordinates over the power basis are scaled to integers, brought to row
/// Hermite normal form and scaled back, so the basis is Q-linearly independent
/// and generates exactly the same group.
pub fn z_module_basis(elements: &[AlgebraicNumber]) -> Result<ZBasis> {
    let Some(first) = elements.first() else {
        return Ok(ZBasis { basis: Vec::new(), coords: Vec::new() });
    };
    let field = first.field().clone();
    if elements.iter().any(|e| e.field() != &field) {
        return Err(Error::FieldMismatch);
    }
    let d = field.degree();
    let mut scale = BigInt::one();
    for e in elements {
        for c in e.coords() {
            scale = scale.lcm(c.denom());
        }
    }
    let rows: Vec<Vec<BigInt>> = elements
        .iter()
        .map(|e| {
            e.coords()
                .iter()
                .map(|c| (c * Rational::from_integer(scale.clone())).to_integer())
                .collect()
        })
        .collect();
    let (hnf, pivots) = hermite_normal_form(rows.clone(), d);

    let basis = hnf
        .iter()
        .map(|row| {
            let coords: Vec<Rational> =
                row.iter().map(|x| Rational::new(x.clone(), scale.clone())).collect();
            field.element(&coords)
        })
        .collect();

    let coords = rows
        .into_iter()
        .map(|mut v| {
            let mut out = vec![BigInt::zero(); hnf.len()];
            for (j, (row, &p)) in hnf.iter().zip(&pivots).enumerate() {
                let (q, r) = v[p].div_rem(&row[p]);
                debug_assert!(r.is_zero(), "element outside the lattice");
                if !q.is_zero() {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &q * y;
                    }
                }
                out[j] = q;
            }
            debug_assert!(v.iter().all(Zero::is_zero));
            out
        })
        .collect();
    Ok(ZBasis { basis, coords })
}

/// Row-style Hermite normal form of the lattice spanned by `rows`. Returns the
/// nonzero rows (positive pivots, entries above a pivot reduced into
/// `[0, pivot)`) and the pivot column of each.
pub(crate) fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        loop {
            let best = (top..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(top, best);
            let mut done = true;
            for i in top + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[top][col]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[top]) {
                    *x -= &q * y;
                }
                if !tail[0][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top < rows.len() && !rows[top][col].is_zero() {
            if rows[top][col].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..top {
                let q = rows[i][col].div_floor(&rows[top][col]);
                if !q.is_zero() {
                    let (head, tail) = rows.split_at_mut(top);
                    for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                        *x -= &q * y;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}
