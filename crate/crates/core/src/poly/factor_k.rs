//! Factorization over an algebraic number field via norms (Trager).

use alloc::vec::Vec;

use super::{factor_rational, BiPoly, Poly};
use crate::field::NumberField;

/// Monic irreducible factors of a squarefree polynomial over its field,
/// sorted. Constants have no factors.
pub fn factor_squarefree_over(f: &Poly) -> Vec<Poly> {
    let field = f.field();
    if f.is_constant() {
        return Vec::new();
    }
    let f = f.monic();
    if f.deg() == 1 {
        return alloc::vec![f];
    }
    let mut out = if field.is_rationals() {
        let coeffs = f.rational_coeffs().expect("rational field");
        factor_rational(&coeffs)
            .into_iter()
            .map(|(g, _)| Poly::from_rationals(field, &g))
            .collect()
    } else {
        trager(&f)
    };
    out.sort();
    out
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

/// Norm of `f(x - k a)` down to Q, where `a` generates the field of `f`.
pub(crate) fn shifted_norm(f: &Poly, k: i64) -> Poly {
    let field = f.field();
    let q = NumberField::rationals();
    let modulus = Poly::from_rationals(&q, field.modulus());
    // main variable y, coefficients in Q[x]
    let m = BiPoly::new(&q, modulus.coeffs().iter().map(|c| Poly::constant(c.clone())).collect());
    let lin = BiPoly::new(&q, alloc::vec![Poly::x(&q), Poly::from_ints(&q, &[-k])]);
    let mut acc = BiPoly::new(&q, Vec::new());
    let mut power = BiPoly::new(&q, alloc::vec![Poly::one(&q)]);
    for c in f.coeffs() {
        let ci = BiPoly::new(
            &q,
            c.coords().iter().map(|r| Poly::constant(q.from_rational(r.clone()))).collect(),
        );
        acc = acc.add(&ci.mul(&power));
        power = power.mul(&lin);
    }
    acc.resultant_x(&m)
}

fn trager(f: &Poly) -> Vec<Poly> {
    let field = f.field();
    let alpha = field.generator();
    for k in shifts() {
        let norm = shifted_norm(f, k);
        if !norm.gcd(&norm.derivative()).is_constant() {
            continue;
        }
        let coeffs = norm.rational_coeffs().expect("norm is rational");
        let factors = factor_rational(&coeffs);
        if factors.len() == 1 {
            return alloc::vec![f.clone()];
        }
        let shift = Poly::from_coeffs(field, alloc::vec![alpha.scale(&crate::field::rat(k)), field.one()]);
        return factors
            .into_iter()
            .map(|(nj, _)| {
                let g = Poly::from_rationals(field, &nj).compose(&shift);
                f.gcd(&g)
            })
            .filter(|g| !g.is_constant())
            .collect();
    }
    unreachable!("some shift gives a squarefree norm")
}
