//! Univariate polynomials and rational functions over a number field.

mod divisor;
mod factor_k;
mod factor_q;
mod modp;
mod rational_function;
pub mod resultant;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};


pub use divisor::{ClosedPoint, Divisor};
pub use factor_k::factor_squarefree_over;
pub(crate) use factor_k::shifted_norm;
pub use factor_q::factor_rational;
pub use rational_function::RationalFunction;
pub use resultant::BiPoly;

use crate::error::{Error, Result};
use crate::field::{AlgebraicNumber, Embedding, NumberField, Rational};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
/// The leading coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: NumberField,
    coeffs: Vec<AlgebraicNumber>,
}

/// Complete factorization `lc * prod f_i^{m_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: AlgebraicNumber,
    pub factors: Vec<(Poly, usize)>,
}

impl Poly {
    pub fn zero(field: &NumberField) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &NumberField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: AlgebraicNumber) -> Self {
        let field = c.field().clone();
        Self::from_coeffs(&field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &NumberField) -> Self {
        Self::from_coeffs(field, vec![field.zero(), field.one()])
    }

    pub fn monomial(c: AlgebraicNumber, k: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_coeffs(&field, coeffs)
    }

    /// `x - a`.
    pub fn linear(a: &AlgebraicNumber) -> Self {
        Self::from_coeffs(a.field(), vec![-a, a.one_like()])
    }

    pub fn from_coeffs(field: &NumberField, mut coeffs: Vec<AlgebraicNumber>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(AlgebraicNumber::is_zero) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn from_rationals(field: &NumberField, coeffs: &[Rational]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|c| field.from_rational(c.clone())).collect())
    }

    pub fn from_ints(field: &NumberField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[AlgebraicNumber] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(AlgebraicNumber::is_one)
    }

    pub fn coeff(&self, i: usize) -> AlgebraicNumber {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> AlgebraicNumber {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &AlgebraicNumber) -> Self {
        Self::from_coeffs(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.lc().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::from_coeffs(&self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(Self::from_coeffs(&self.field, coeffs))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = divisor.deg();
        if self.coeffs.len() <= db {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let inv = divisor.lc().inverse()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] * &inv;
            if !c.is_zero() {
                for (j, bj) in divisor.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * bj);
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((Self::from_coeffs(&self.field, q), Self::from_coeffs(&self.field, r)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("exact division by a nonzero polynomial");
        debug_assert!(r.is_zero(), "division is not exact");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from_integer((i as i64).into())))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rational::new(1.into(), ((i + 1) as i64).into()))),
        );
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn eval(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + a)`.
    pub fn taylor_shift(&self, a: &AlgebraicNumber) -> Self {
        self.compose(&Self::from_coeffs(&self.field, vec![a.clone(), self.field.one()]))
    }

    /// Reversed polynomial `x^n self(1/x)` with `n = deg self`.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("same field");
            a = core::mem::replace(&mut b, if r.is_zero() { r } else { r.monic() });
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let field = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero(field));
        let (mut t0, mut t1) = (Self::zero(field), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("same field");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inverse().expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Solves `s*a + t*b = c` with `deg s < deg b`, assuming `gcd(a, b) | c`.
    pub fn solve_bezout(a: &Self, b: &Self, c: &Self) -> (Self, Self) {
        let (g, s0, _) = a.ext_gcd(b);
        let cg = c.exact_div(&g);
        let s = (&s0 * &cg).rem(b).expect("b nonzero");
        let t = (c - &(&s * a)).exact_div(b);
        (s, t)
    }

    /// Image of the polynomial under a field embedding.
    pub fn embed(&self, e: &Embedding) -> Self {
        Self::from_coeffs(e.target(), self.coeffs.iter().map(|c| e.apply(c)).collect())
    }

    /// The coefficients as rationals, when all of them lie in Q.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(AlgebraicNumber::to_rational).collect()
    }

    /// Multiplicity of `q` as a factor of `self` (`self` nonzero, `q`
    /// nonconstant).
    pub fn multiplicity(&self, q: &Self) -> usize {
        let mut n = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            let (quot, r) = p.div_rem(q).expect("nonzero divisor");
            if !r.is_zero() {
                break;
            }
            p = quot;
            n += 1;
        }
        n
    }

    /// Squarefree decomposition (Yun): monic, squarefree, pairwise coprime
    /// factors with strictly increasing multiplicities, `self = lc * prod f^m`.
    pub fn squarefree(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        let mut c = f.exact_div(&g);
        let mut d = &df.exact_div(&g) - &c.derivative();
        let mut i = 1;
        while !c.is_constant() {
            let a = c.gcd(&d);
            c = c.exact_div(&a);
            d = &d.exact_div(&a) - &c.derivative();
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Complete factorization over the polynomial's own field.
    pub fn factor(&self) -> Factorization {
        assert!(!self.is_zero(), "factorization of zero");
        let unit = self.lc();
        let mut factors = Vec::new();
        for (s, m) in self.squarefree() {
            for f in factor_squarefree_over(&s) {
                factors.push((f, m));
            }
        }
        factors.sort();
        Factorization { unit, factors }
    }

    /// Factorization over Q of a polynomial with rational coefficients; the
    /// factors are returned in the polynomial's field.
    pub fn factor_q(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(crate::error::precondition("factorization of zero"));
        }
        let q = self
            .rational_coeffs()
            .ok_or_else(|| crate::error::precondition("coefficients are not rational"))?;
        let mut out: Vec<(Self, usize)> = factor_rational(&q)
            .into_iter()
            .map(|(f, m)| (Self::from_rationals(&self.field, &f), m))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Roots of the polynomial lying in its own field, without multiplicity.
    pub fn roots(&self) -> Vec<AlgebraicNumber> {
        let mut out: Vec<AlgebraicNumber> = self
            .factor()
            .factors
            .into_iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, _)| -f.coeff(0))
            .collect();
        out.sort();
        out
    }

    /// Resultant with the convention `res(a, b) = lc(b)^{deg a} prod a(beta)`
    /// over the roots `beta` of `b`.
    pub fn resultant(&self, other: &Self) -> AlgebraicNumber {
        resultant::resultant(&self.coeffs, &other.coeffs)
    }

    /// `self mod q` trace: for `q` monic of degree `d`, the trace of the class
    /// of `self` in `K[x]/(q)` over `K`.
    pub fn trace_mod(&self, q: &Self) -> AlgebraicNumber {
        let r = self.rem(q).expect("nonzero modulus");
        let sums = power_sums(q);
        r.coeffs.iter().zip(&sums).fold(self.field.zero(), |acc, (c, s)| &acc + &(c * s))
    }

    /// Inverse of `self` modulo `q`, if coprime.
    pub fn inverse_mod(&self, q: &Self) -> Option<Self> {
        let (g, s, _) = self.ext_gcd(q);
        if g.is_one() {
            Some(s.rem(q).expect("nonzero modulus"))
        } else {
            None
        }
    }
}

/// Power sums `p_0..p_{d-1}` of the roots of a monic polynomial of degree d.
fn power_sums(q: &Poly) -> Vec<AlgebraicNumber> {
    let field = q.field();
    let d = q.deg();
    let c = q.coeffs();
    let mut p: Vec<AlgebraicNumber> = Vec::with_capacity(d);
    for k in 0..d {
        if k == 0 {
            p.push(field.from_int(d as i64));
            continue;
        }
        let mut acc = c[d - k].scale(&Rational::from_integer((k as i64).into()));
        for j in 1..k {
            acc = &acc + &(&c[d - j] * &p[k - j]);
        }
        p.push(-acc);
    }
    p
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            /// Panics when the operands live over different fields.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomial arithmetic")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(&q(), c)
    }

    #[test]
    fn division_by_linear() {
        let (quot, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(quot, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[1]).div_rem(&Poly::zero(&q())), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_and_compose() {
        assert_eq!(p(&[0, 0, -1, 1]).derivative(), p(&[0, -2, 3]));
        assert_eq!(p(&[1, 0, 1]).compose(&p(&[0, 0, 0, 1])), p(&[1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn gcds() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        // Euclid by hand: x^3 - x^2 = (x - 1) * x^2 + 0
        assert_eq!(p(&[0, 0, -1, 1]).gcd(&p(&[0, 0, 1])), p(&[0, 0, 1]));
        assert_eq!(p(&[3, 5, 7]).gcd(&p(&[1])), p(&[1]));
    }

    #[test]
    fn squarefree_examples() {
        // x^3 - x^2 = x^2 (x - 1)
        assert_eq!(p(&[0, 0, -1, 1]).squarefree(), vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 2)]);
        assert_eq!(p(&[-2, 0, 1]).squarefree(), vec![(p(&[-2, 0, 1]), 1)]);
        assert_eq!(p(&[-1, 3, -3, 1]).squarefree(), vec![(p(&[-1, 1]), 3)]);
    }

    #[test]
    fn factor_q_examples() {
        assert_eq!(p(&[0, 0, -1, 1]).factor_q().unwrap(), vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 2)]);
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let mut f = p(&[-1, 0, 0, 0, 0, 0, 1]).factor_q().unwrap();
        f.sort();
        assert_eq!(
            f,
            vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, -1, 1]), 1), (p(&[1, 1, 1]), 1)]
        );
        assert_eq!(p(&[-2, 0, 1]).factor_q().unwrap(), vec![(p(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn trace_mod_quadratic() {
        // x mod x^2 - 2: roots ±sqrt2, trace 0; x^2 -> 2 + 2 = 4
        let m = p(&[-2, 0, 1]);
        assert!(p(&[0, 1]).trace_mod(&m).is_zero());
        assert_eq!(p(&[0, 0, 1]).trace_mod(&m), q().from_int(4));
        assert_eq!(p(&[3]).trace_mod(&m), q().from_int(6));
    }

    #[test]
    fn bezout() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 0, 1, 2]);
        let c = p(&[5, 0, 1]);
        let (s, t) = Poly::solve_bezout(&a, &b, &c);
        assert!(s.deg() < b.deg());
        assert_eq!(&(&s * &a) + &(&t * &b), c);
    }
}
