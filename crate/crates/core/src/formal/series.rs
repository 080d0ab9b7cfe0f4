//! Truncated power series `sum_{k<n} a_k t^k` as coefficient vectors.

use alloc::vec::Vec;

use crate::field::{AlgebraicNumber, NumberField};
use crate::poly::{Poly, RationalFunction};

pub(crate) type Series = Vec<AlgebraicNumber>;

pub(crate) fn zeros(field: &NumberField, n: usize) -> Series {
    (0..n).map(|_| field.zero()).collect()
}

pub(crate) fn add(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn scale(a: &Series, c: &AlgebraicNumber) -> Series {
    a.iter().map(|x| x * c).collect()
}

pub(crate) fn mul(a: &Series, b: &Series) -> Series {
    let n = a.len().min(b.len());
    let field = a[0].field();
    let mut out = zeros(field, n);
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `1/a`, for `a_0 != 0`.
pub(crate) fn inv(a: &Series) -> Series {
    let n = a.len();
    let field = a[0].field();
    let i0 = a[0].inverse().expect("unit series");
    let mut out = zeros(field, n);
    out[0] = i0.clone();
    for k in 1..n {
        let mut acc = field.zero();
        for j in 1..=k {
            acc = &acc + &(&a[j] * &out[k - j]);
        }
        out[k] = -&(&acc * &i0);
    }
    out
}

/// `t * a(t)` truncated to the same length.
pub(crate) fn shift(a: &Series, by: usize) -> Series {
    let field = a[0].field();
    let n = a.len();
    (0..n).map(|i| if i < by { field.zero() } else { a[i - by].clone() }).collect()
}

pub(crate) fn derivative(a: &Series) -> Series {
    let field = a[0].field();
    let mut out: Series = a.iter().enumerate().skip(1).map(|(i, c)| c.scale(&crate::field::rat(i as i64))).collect();
    out.push(field.zero());
    out
}

/// `exp(a)` for `a_0 = 0`.
pub(crate) fn exp(a: &Series) -> Series {
    let n = a.len();
    let field = a[0].field();
    let mut out = zeros(field, n);
    out[0] = field.one();
    for k in 1..n {
        let mut acc = field.zero();
        for j in 1..=k {
            acc = &acc + &(&a[j].scale(&crate::field::rat(j as i64)) * &out[k - j]);
        }
        out[k] = acc.scale(&crate::field::Rational::new(1.into(), (k as i64).into()));
    }
    out
}

/// `a^(p/q)` for `a_0 = 1`.
pub(crate) fn pow_frac(a: &Series, p: i64, q: i64) -> Series {
    let n = a.len();
    let field = a[0].field();
    debug_assert!(a[0].is_one());
    let alpha = crate::field::Rational::new(p.into(), q.into());
    let mut out = zeros(field, n);
    out[0] = field.one();
    for k in 1..n {
        let mut acc = field.zero();
        for j in 1..=k {
            let w = &alpha * crate::field::rat(j as i64) - crate::field::rat((k - j) as i64);
            acc = &acc + &(&a[j] * &out[k - j]).scale(&w);
        }
        out[k] = acc.scale(&crate::field::Rational::new(1.into(), (k as i64).into()));
    }
    out
}

/// `p(s)` for a polynomial `p` and a series `s`.
pub(crate) fn eval_poly(p: &Poly, s: &Series) -> Series {
    let field = s[0].field();
    let mut acc = zeros(field, s.len());
    for c in p.coeffs().iter().rev() {
        acc = mul(&acc, s);
        acc[0] = &acc[0] + c;
    }
    acc
}

/// Laurent expansion `f(s0 + y) = y^v (b_0 + b_1 y + ...)` with `b_0 != 0`,
/// returning `v` and `n` coefficients `b`.
pub(crate) fn laurent(f: &RationalFunction, s0: &AlgebraicNumber, n: usize) -> (i64, Series) {
    let num = f.num().taylor_shift(s0);
    let den = f.den().taylor_shift(s0);
    let vn = num.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero function");
    let vd = den.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero denominator");
    let top: Series = (0..n).map(|i| num.coeff(i + vn)).collect();
    let bottom: Series = (0..n).map(|i| den.coeff(i + vd)).collect();
    (vn as i64 - vd as i64, mul(&top, &inv(&bottom)))
}
