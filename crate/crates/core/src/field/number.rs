use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{qpoly, Rational};
use crate::error::{Error, Result};

/// The number field `Q[t]/(m(t))` for a monic irreducible `m`.
///
/// Cloning is cheap; two handles are the same field when their defining
/// polynomials agree.
#[derive(Clone)]
pub struct NumberField(Arc<Vec<Rational>>);

impl NumberField {
    /// The field of rationals, presented as `Q[t]/(t)`.
    pub fn rationals() -> Self {
        NumberField(Arc::new(vec![Rational::zero(), Rational::one()]))
    }

    /// Builds `Q[t]/(m)` after checking that `m` is nonconstant and
    /// irreducible over Q. `m` is made monic; coefficients are listed from the
    /// constant term upwards.
    pub fn new(modulus: Vec<Rational>) -> Result<Self> {
        let mut m = modulus;
        qpoly::trim(&mut m);
        if m.len() < 2 {
            return Err(crate::error::precondition("defining polynomial must be nonconstant"));
        }
        let factors = crate::poly::factor_rational(&m);
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::Reducible);
        }
        Ok(Self::new_unchecked(m))
    }

    /// Like [`NumberField::new`] without the irreducibility check.
    pub(crate) fn new_unchecked(mut m: Vec<Rational>) -> Self {
        qpoly::trim(&mut m);
        let lc = m.last().expect("nonzero modulus").clone();
        if !lc.is_one() {
            for c in m.iter_mut() {
                *c = &*c / &lc;
            }
        }
        NumberField(Arc::new(m))
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// Monic defining polynomial, constant term first.
    pub fn modulus(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn zero(&self) -> AlgebraicNumber {
        AlgebraicNumber { field: self.clone(), coords: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> AlgebraicNumber {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> AlgebraicNumber {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: Rational) -> AlgebraicNumber {
        let mut z = self.zero();
        z.coords[0] = q;
        z
    }

    /// The class of `t`, i.e. a root of the defining polynomial.
    pub fn generator(&self) -> AlgebraicNumber {
        if self.degree() == 1 {
            // Q[t]/(t - c): t is the rational c
            return self.from_rational(-self.0[0].clone());
        }
        let mut z = self.zero();
        z.coords[1] = Rational::one();
        z
    }

    /// Element with the given power-basis coordinates (reduced modulo m).
    pub fn element(&self, coords: &[Rational]) -> AlgebraicNumber {
        let (_, mut r) = qpoly::divrem(coords, &self.0);
        r.resize(self.degree(), Rational::zero());
        AlgebraicNumber { field: self.clone(), coords: r }
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/(")?;
        write_qpoly(f, &self.0, "t")?;
        write!(f, ")")
    }
}

fn write_qpoly(f: &mut fmt::Formatter<'_>, p: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{c}")?,
            1 => write!(f, "{c}*{var}")?,
            _ => write!(f, "{c}*{var}^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// An element of a [`NumberField`], stored by its coordinates in the power
/// basis `1, t, ..., t^(d-1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    field: NumberField,
    coords: Vec<Rational>,
}

impl AlgebraicNumber {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, when it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn zero_like(&self) -> Self {
        self.field.zero()
    }

    pub fn one_like(&self) -> Self {
        self.field.one()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(AlgebraicNumber { field: self.field.clone(), coords })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(AlgebraicNumber { field: self.field.clone(), coords })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = self.field.degree();
        if d == 1 {
            return Ok(self.field.from_rational(&self.coords[0] * &other.coords[0]));
        }
        let m = self.field.modulus();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = core::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m[..d].iter().enumerate() {
                prod[k - d + j] -= &c * mj;
            }
        }
        prod.truncate(d);
        Ok(AlgebraicNumber { field: self.field.clone(), coords: prod })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        let inv = qpoly::inverse_mod(&self.coords, self.field.modulus())
            .expect("nonzero element of a field is invertible");
        Ok(self.field.element(&inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        AlgebraicNumber {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    /// Trace of the element over Q (sum of its conjugates).
    pub fn trace(&self) -> Rational {
        // power sums of the roots of m via Newton's identities
        let m = self.field.modulus();
        let d = self.field.degree();
        let sums = power_sums(m, d);
        self.coords.iter().zip(&sums).map(|(c, s)| c * s).sum()
    }
}

/// Power sums `p_0..p_{n-1}` of the roots of a monic polynomial (constant term
/// first) with coefficients in any ring supporting the few operations below.
pub(crate) fn power_sums(m: &[Rational], n: usize) -> Vec<Rational> {
    let d = m.len() - 1;
    // e-coefficients: m = x^d + c_{d-1} x^{d-1} + ... + c_0
    let mut p = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            p.push(Rational::from_integer(BigInt::from(d)));
            continue;
        }
        // p_k + c_{d-1} p_{k-1} + ... + c_{d-k+1} p_1 + k c_{d-k} = 0   (k <= d)
        // p_k + c_{d-1} p_{k-1} + ... + c_0 p_{k-d} = 0                   (k > d)
        let mut acc = Rational::zero();
        for j in 1..k.min(d + 1) {
            acc += &m[d - j] * &p[k - j];
        }
        if k <= d {
            acc += &m[d - k] * Rational::from_integer(BigInt::from(k));
        } else {
            acc += &m[0] * &p[k - d];
        }
        p.push(-acc);
    }
    p
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_qpoly(f, &self.coords, "a")?;
        write!(f, "]")
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_qpoly(f, &self.coords, "a")
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on coordinates: a deterministic tie-breaker, not a
/// field ordering.
impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords
            .len()
            .cmp(&other.coords.len())
            .then_with(|| self.coords.iter().rev().cmp(other.coords.iter().rev()))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&AlgebraicNumber> for &AlgebraicNumber {
            type Output = AlgebraicNumber;
            /// Panics when the operands live in different fields.
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                self.$checked(rhs).expect("number field arithmetic")
            }
        }
        impl $tr<AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -&self
    }
}

/// A field homomorphism `source -> target`, determined by the image of the
/// generator of `source`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    source: NumberField,
    target: NumberField,
    image: AlgebraicNumber,
}

impl Embedding {
    pub fn identity(field: &NumberField) -> Self {
        Embedding { source: field.clone(), target: field.clone(), image: field.generator() }
    }

    /// The embedding sending the generator of `source` to `image`. The caller
    /// guarantees that `image` is a root of the defining polynomial.
    pub(crate) fn new_unchecked(source: NumberField, image: AlgebraicNumber) -> Self {
        let target = image.field().clone();
        Embedding { source, target, image }
    }

    /// Checked constructor: `image` must be a root of the source modulus.
    pub fn new(source: NumberField, image: AlgebraicNumber) -> Result<Self> {
        let m = source.modulus();
        let mut acc = image.zero_like();
        for c in m.iter().rev() {
            acc = &(&acc * &image) + &image.field().from_rational(c.clone());
        }
        if !acc.is_zero() {
            return Err(crate::error::precondition("image is not a root of the source modulus"));
        }
        Ok(Self::new_unchecked(source, image))
    }

    pub fn source(&self) -> &NumberField {
        &self.source
    }

    pub fn target(&self) -> &NumberField {
        &self.target
    }

    pub fn image_of_generator(&self) -> &AlgebraicNumber {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.image == self.source.generator()
    }

    /// Image of an element of the source field.
    pub fn apply(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        debug_assert!(x.field() == &self.source, "embedding applied outside its source");
        if self.is_identity() {
            return x.clone();
        }
        if self.source.degree() == 1 {
            return self.target.from_rational(x.coords()[0].clone());
        }
        let mut acc = self.target.zero();
        for c in x.coords().iter().rev() {
            acc = &(&acc * &self.image) + &self.target.from_rational(c.clone());
        }
        acc
    }

    /// The element of the source mapping to `y`, if `y` lies in the image.
    pub fn preimage(&self, y: &AlgebraicNumber) -> Option<AlgebraicNumber> {
        if self.is_identity() {
            return Some(y.clone());
        }
        let d = self.source.degree();
        let q = NumberField::rationals();
        let mut powers = Vec::with_capacity(d);
        let mut p = self.target.one();
        for _ in 0..d {
            powers.push(p.clone());
            p = &p * &self.image;
        }
        let rows: Vec<Vec<AlgebraicNumber>> = (0..self.target.degree())
            .map(|i| {
                let mut row: Vec<AlgebraicNumber> =
                    powers.iter().map(|e| q.from_rational(e.coords()[i].clone())).collect();
                row.push(q.from_rational(-y.coords()[i].clone()));
                row
            })
            .collect();
        let kernel = super::linalg::nullspace(rows, d + 1, &q.zero());
        let v = kernel.into_iter().find(|v| !v[d].is_zero())?;
        let s = v[d].to_rational()?;
        let coords: Vec<Rational> = v[..d].iter().map(|c| c.to_rational().expect("rational") / &s).collect();
        Some(self.source.element(&coords))
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Embedding) -> Embedding {
        assert!(self.target == other.source, "embeddings do not compose");
        Embedding {
            source: self.source.clone(),
            target: other.target.clone(),
            image: other.apply(&self.image),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn qsqrt2() -> NumberField {
        NumberField::new(vec![rat(-2), rat(0), rat(1)]).unwrap()
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let k = qsqrt2();
        let a = k.generator();
        assert_eq!(&a * &a, k.from_int(2));
    }

    #[test]
    fn conjugate_product() {
        let k = qsqrt2();
        let a = k.generator();
        let one = k.one();
        assert_eq!(&(&one + &a) * &(&one - &a), k.from_int(-1));
    }

    #[test]
    fn additive_identity() {
        let k = qsqrt2();
        let a = &k.generator() + &k.from_int(3);
        assert_eq!(&a + &k.zero(), a);
    }

    #[test]
    fn division_and_errors() {
        let k = qsqrt2();
        let a = &k.generator() + &k.one();
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(a.checked_div(&k.zero()), Err(Error::DivisionByZero));
        let q = NumberField::rationals();
        assert_eq!(a.checked_add(&q.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(NumberField::new(vec![rat(-1), rat(0), rat(1)]), Err(Error::Reducible));
    }

    #[test]
    fn trace_of_generator() {
        let k = NumberField::new(vec![rat(-2), rat(0), rat(0), rat(1)]).unwrap();
        assert_eq!(k.generator().trace(), rat(0));
        assert_eq!(k.from_int(5).trace(), rat(15));
        let a = k.generator();
        assert_eq!((&(&a * &a) * &a).trace(), rat(6));
    }

    #[test]
    fn embedding_composes() {
        let k = qsqrt2();
        // Q(sqrt2) -> Q(2^(1/4)), sqrt2 -> w^2
        let l = NumberField::new(vec![rat(-2), rat(0), rat(0), rat(0), rat(1)]).unwrap();
        let w = l.generator();
        let e = Embedding::new(k.clone(), &w * &w).unwrap();
        let x = &k.generator() + &k.from_int(1);
        let y = e.apply(&x);
        assert_eq!(&(&y - &l.one()) * &(&y - &l.one()), l.from_int(2));
        let id = Embedding::identity(&k);
        assert_eq!(id.then(&e), e);
        assert!(Embedding::new(k, w).is_err());
    }
}
