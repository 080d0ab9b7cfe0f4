//! Resultants by the subresultant polynomial remainder sequence, generic over
//! the coefficient domain so the same routine serves `K` and `K[t]`.

use alloc::vec::Vec;

use super::Poly;
use crate::field::{AlgebraicNumber, NumberField};

/// An integral domain with exact division, enough for pseudo-remainders.
pub trait Domain: Clone + PartialEq {
    fn d_zero(&self) -> Self;
    fn d_one(&self) -> Self;
    fn d_is_zero(&self) -> bool;
    fn d_add(&self, o: &Self) -> Self;
    fn d_sub(&self, o: &Self) -> Self;
    fn d_mul(&self, o: &Self) -> Self;
    fn d_neg(&self) -> Self;
    /// Division known to be exact.
    fn d_div(&self, o: &Self) -> Self;
}

impl Domain for AlgebraicNumber {
    fn d_zero(&self) -> Self {
        self.zero_like()
    }
    fn d_one(&self) -> Self {
        self.one_like()
    }
    fn d_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn d_add(&self, o: &Self) -> Self {
        self + o
    }
    fn d_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn d_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn d_neg(&self) -> Self {
        -self
    }
    fn d_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Domain for Poly {
    fn d_zero(&self) -> Self {
        Poly::zero(self.field())
    }
    fn d_one(&self) -> Self {
        Poly::one(self.field())
    }
    fn d_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn d_add(&self, o: &Self) -> Self {
        self + o
    }
    fn d_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn d_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn d_neg(&self) -> Self {
        -self
    }
    fn d_div(&self, o: &Self) -> Self {
        self.exact_div(o)
    }
}

fn trim<D: Domain>(v: &mut Vec<D>) {
    while v.last().is_some_and(Domain::d_is_zero) {
        v.pop();
    }
}

fn pow<D: Domain>(x: &D, n: usize) -> D {
    let mut acc = x.d_one();
    for _ in 0..n {
        acc = acc.d_mul(x);
    }
    acc
}

/// Pseudo-remainder: `lc(b)^{deg a - deg b + 1} a mod b`.
fn prem<D: Domain>(a: &[D], b: &[D]) -> Vec<D> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    let mut e = a.len() - b.len() + 1;
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let lr = r.last().expect("nonempty").clone();
        for x in r.iter_mut() {
            *x = x.d_mul(lcb);
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = r[k + j].d_sub(&lr.d_mul(bj));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = pow(lcb, e);
        for x in r.iter_mut() {
            *x = x.d_mul(&f);
        }
    }
    r
}

/// Sylvester resultant `Res(a, b) = lc(a)^{deg b} prod_{a(alpha)=0} b(alpha)`.
/// Both inputs must be nonzero.
pub(crate) fn sylvester_resultant<D: Domain>(a: &[D], b: &[D]) -> D {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    assert!(!a.is_empty() && !b.is_empty(), "resultant of a zero polynomial");
    let mut negate = false;
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            negate = !negate;
        }
    }
    let finish = |v: D, negate: bool| if negate { v.d_neg() } else { v };
    if b.len() == 1 {
        return finish(pow(&b[0], a.len() - 1), negate);
    }
    let mut g = a[0].d_one();
    let mut h = a[0].d_one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return a[0].d_zero();
        }
        let div = g.d_mul(&pow(&h, delta));
        b = r.iter().map(|x| x.d_div(&div)).collect();
        g = a.last().expect("nonempty").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => pow(&g, delta).d_div(&pow(&h, delta - 1)),
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let out = pow(&b[0], da).d_div(&pow(&h, da - 1));
    finish(out, negate)
}

/// Resultant with the convention `res(a, b) = lc(b)^{deg a} prod a(beta)`
/// over the roots `beta` of `b` (equivalently `Res(b, a)` in Sylvester's
/// convention). A constant `a = c` gives `c^{deg b}`.
pub fn resultant<D: Domain>(a: &[D], b: &[D]) -> D {
    sylvester_resultant(b, a)
}

/// Polynomial in `x` whose coefficients are polynomials in a second
/// variable `t`: `sum_i coeffs[i](t) x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    field: NumberField,
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(field: &NumberField, mut coeffs: Vec<Poly>) -> Self {
        trim(&mut coeffs);
        BiPoly { field: field.clone(), coeffs }
    }

    /// Embeds `p(x)` with constant coefficients in `t`.
    pub fn from_x(p: &Poly) -> Self {
        let coeffs = p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect();
        Self::new(p.field(), coeffs)
    }

    /// Embeds `p(t)` as a polynomial of degree 0 in `x`.
    pub fn from_t(p: &Poly) -> Self {
        Self::new(p.field(), alloc::vec![p.clone()])
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Poly::zero(&self.field);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Self::new(&self.field, coeffs)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let neg = BiPoly { field: o.field.clone(), coeffs: o.coeffs.iter().map(|c| -c).collect() };
        self.add(&neg)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(&self.field, Vec::new());
        }
        let mut coeffs = alloc::vec![Poly::zero(&self.field); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, coeffs)
    }

    /// Swaps the roles of `x` and `t`.
    pub fn transpose(&self) -> Self {
        let n = self.coeffs.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
        let coeffs = (0..n)
            .map(|j| {
                Poly::from_coeffs(&self.field, self.coeffs.iter().map(|c| c.coeff(j)).collect())
            })
            .collect();
        Self::new(&self.field, coeffs)
    }

    /// Eliminates `x`: the resultant (convention of [`resultant`]) as a
    /// polynomial in `t`.
    pub fn resultant_x(&self, other: &Self) -> Poly {
        resultant(&self.coeffs, &other.coeffs)
    }

    /// Eliminates `t`, returning a polynomial in `x`.
    pub fn resultant_t(&self, other: &Self) -> Poly {
        self.transpose().resultant_x(&other.transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(&q(), c)
    }

    /// x-coefficient list with entries given as polynomials in t.
    fn bi(c: &[&[i64]]) -> BiPoly {
        BiPoly::new(&q(), c.iter().map(|t| p(t)).collect())
    }

    #[test]
    fn linear_pair_sign_convention() {
        // res_x(x - t, x - 1) = lc(b)^1 * a(1) = 1 - t
        let a = bi(&[&[0, -1], &[1]]);
        let b = bi(&[&[-1], &[1]]);
        assert_eq!(a.resultant_x(&b), p(&[1, -1]));
    }

    #[test]
    fn quadratic_against_linear() {
        // res_x(x^2 - 2, x - t) = a(t) = t^2 - 2
        let a = bi(&[&[-2], &[], &[1]]);
        let b = bi(&[&[0, -1], &[1]]);
        assert_eq!(a.resultant_x(&b), p(&[-2, 0, 1]));
    }

    #[test]
    fn constant_first_argument() {
        let q = q();
        let c = q.from_int(3);
        assert_eq!(resultant(&[c], p(&[1, 2, 1]).coeffs()), q.from_int(9));
    }

    #[test]
    fn matches_root_product() {
        // a = (x-1)(x-2)(x+3), b = 2(x-5)(x+1): lc(b)^3 a(5) a(-1)
        let a = &(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[3, 1]);
        let b = (&p(&[-5, 1]) * &p(&[1, 1])).scale(&q().from_int(2));
        let expect = 8 * (4 * 3 * 8) * (-2 * -3 * 2);
        assert_eq!(a.resultant(&b), q().from_int(expect));
        // swapped: lc(a)^2 b(1) b(2) b(-3) = 2*(-4)(2) * 2*(-3)(3) * 2*(-8)(-2)
        let expect2 = (2 * -4 * 2) * (2 * -3 * 3) * (2 * -8 * -2);
        assert_eq!(b.resultant(&a), q().from_int(expect2));
    }

    #[test]
    fn common_factor_gives_zero() {
        let a = &p(&[-1, 1]) * &p(&[1, 0, 1]);
        let b = &p(&[-1, 1]) * &p(&[4, 1]);
        assert!(a.resultant(&b).is_zero());
    }

    #[test]
    fn degree_gap_larger_than_one() {
        // a = x^5 + 1, b = x^2 - 3: lc(b)^5 prod a(±sqrt3) = (1 + 9 sqrt3)(1 - 9 sqrt3) = 1 - 243
        let a = p(&[1, 0, 0, 0, 0, 1]);
        let b = p(&[-3, 0, 1]);
        assert_eq!(a.resultant(&b), q().from_int(1 - 243));
        // Sylvester convention: Res(b, a) computed the other way round
        assert_eq!(b.resultant(&a), q().from_int(1 - 243));
    }

    #[test]
    fn transpose_roundtrip() {
        let a = bi(&[&[1, 2], &[0, 0, 3], &[5]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().coeffs()[1], p(&[2]));
        let _ = vec![0];
    }
}
