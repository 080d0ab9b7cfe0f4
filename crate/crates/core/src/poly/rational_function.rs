use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{AlgebraicNumber, Embedding, NumberField};

/// Reduced quotient `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.field()));
        }
        let g = num.gcd(&den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let inv = den.lc().inverse()?;
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn constant(c: AlgebraicNumber) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero(field: &NumberField) -> Self {
        Self::from_poly(Poly::zero(field))
    }

    pub fn one(field: &NumberField) -> Self {
        Self::from_poly(Poly::one(field))
    }

    pub fn x(field: &NumberField) -> Self {
        Self::from_poly(Poly::x(field))
    }

    pub fn field(&self) -> &NumberField {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Degree as a map of the projective line: `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.num.deg().max(self.den.deg())
    }

    /// The constant value, when the function is constant.
    pub fn as_constant(&self) -> Option<AlgebraicNumber> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let num = self.num.checked_mul(&o.den)?.checked_add(&o.num.checked_mul(&self.den)?)?;
        Self::new(num, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        Self::new(self.num.checked_mul(&o.num)?, self.den.checked_mul(&o.den)?)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.checked_mul(&o.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &AlgebraicNumber) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let n = e.unsigned_abs() as usize;
        Ok(RationalFunction { num: base.num.pow(n), den: base.den.pow(n) })
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(num, &self.den * &self.den).expect("nonzero denominator")
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let n = self.degree();
        let (a, b) = (&inner.num, &inner.den);
        let homogenize = |p: &Poly| -> Poly {
            let mut acc = Poly::zero(p.field());
            for (i, c) in p.coeffs().iter().enumerate() {
                let term = (&a.pow(i) * &b.pow(n - i)).scale(c);
                acc = &acc + &term;
            }
            acc
        };
        Self::new(homogenize(&self.num), homogenize(&self.den)).expect("nonzero denominator")
    }

    /// Value at a finite point; fails at a pole.
    pub fn eval(&self, a: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.num.eval(a).checked_div(&d)
    }

    pub fn embed(&self, e: &Embedding) -> Self {
        Self::new(self.num.embed(e), self.den.embed(e)).expect("embedding is injective")
    }

    /// Whether numerator and denominator have rational coefficients.
    pub fn is_rational(&self) -> bool {
        self.num.rational_coeffs().is_some() && self.den.rational_coeffs().is_some()
    }

    /// Splits into polynomial part and proper part `r / den`.
    pub fn polynomial_part(&self) -> (Poly, Poly) {
        self.num.div_rem(&self.den).expect("nonzero denominator")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl PartialOrd for RationalFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.num.cmp(&other.num))
    }
}

macro_rules! rf_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$checked(rhs).expect(concat!("rational function ", stringify!($method)))
            }
        }
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

rf_binop!(Add, add, checked_add);
rf_binop!(Sub, sub, checked_sub);
rf_binop!(Mul, mul, checked_mul);
rf_binop!(Div, div, checked_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

/// Helper for building `num / den` from integer coefficient lists over Q.
#[cfg(test)]
pub(crate) fn rf_ints(num: &[i64], den: &[i64]) -> RationalFunction {
    let q = NumberField::rationals();
    RationalFunction::new(Poly::from_ints(&q, num), Poly::from_ints(&q, den)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let f = rf_ints(&[-2, 2], &[-2, 0, 2]);
        assert_eq!(f, rf_ints(&[1], &[1, 1]));
        assert!(f.den().is_monic());
    }

    #[test]
    fn arithmetic_and_derivative() {
        let f = rf_ints(&[1], &[0, 1]);
        let g = rf_ints(&[0, 1], &[1]);
        assert_eq!(&f * &g, rf_ints(&[1], &[1]));
        assert_eq!(f.derivative(), rf_ints(&[-1], &[0, 0, 1]));
        assert_eq!(&f + &g, rf_ints(&[1, 0, 1], &[0, 1]));
    }

    #[test]
    fn composition() {
        // f = 1/(x^2 + 1), inner = 1/x  ->  x^2/(1 + x^2)
        let f = rf_ints(&[1], &[1, 0, 1]);
        let inner = rf_ints(&[1], &[0, 1]);
        assert_eq!(f.compose(&inner), rf_ints(&[0, 0, 1], &[1, 0, 1]));
        let sq = rf_ints(&[0, 0, 1], &[1]);
        assert_eq!(f.compose(&sq), rf_ints(&[1], &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn pole_evaluation_fails() {
        let f = rf_ints(&[1], &[0, 1]);
        let q = NumberField::rationals();
        assert_eq!(f.eval(&q.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.eval(&q.from_int(2)).unwrap(), q.from_rational(crate::field::Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn negative_power() {
        let f = rf_ints(&[0, 1], &[1, 1]);
        assert_eq!(f.pow(-2).unwrap(), rf_ints(&[1, 2, 1], &[0, 0, 1]));
    }
}

