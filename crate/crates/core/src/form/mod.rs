//! Rational 1-forms `w(x) dx` on the projective line.

mod hermite;
mod log;

use alloc::vec::Vec;
use core::fmt;

pub use log::{LogDecomposition, LogTerm};
pub(crate) use log::rothstein_trager;

use crate::error::{Error, Result};
use crate::field::{adjoin_root, AdjoinedRoot, AlgebraicNumber, Embedding, NumberField};
use crate::poly::{ClosedPoint, Divisor, Poly, RationalFunction};

/// The 1-form `w dx`.
#[derive(Clone, PartialEq, Eq)]
pub struct OneForm {
    w: RationalFunction,
}

/// Residue of a form at a closed point `q`: the class of `N/D'` in the
/// residue field `K[x]/(q)`, represented by a polynomial of degree below
/// `deg q`. At infinity the class is a constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub point: ClosedPoint,
    pub class: Poly,
}

impl OneForm {
    pub fn new(w: RationalFunction) -> Self {
        OneForm { w }
    }

    /// `dx / g`, the form attached to `u' = g(u)`.
    pub fn from_ode(g: &RationalFunction) -> Result<Self> {
        Ok(OneForm { w: g.inverse()? })
    }

    pub fn zero(field: &NumberField) -> Self {
        OneForm { w: RationalFunction::zero(field) }
    }

    /// `dv`.
    pub fn differential(v: &RationalFunction) -> Self {
        OneForm { w: v.derivative() }
    }

    /// `du/u`.
    pub fn dlog(u: &RationalFunction) -> Result<Self> {
        Ok(OneForm { w: u.derivative().checked_div(u)? })
    }

    pub fn w(&self) -> &RationalFunction {
        &self.w
    }

    pub fn field(&self) -> &NumberField {
        self.w.field()
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero()
    }

    /// `g` with `self = dx/g`.
    pub fn dual_derivation(&self) -> Result<RationalFunction> {
        self.w.inverse().map_err(|_| Error::ZeroForm)
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        Ok(OneForm { w: self.w.checked_add(&o.w)? })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        Ok(OneForm { w: self.w.checked_sub(&o.w)? })
    }

    pub fn scale(&self, c: &AlgebraicNumber) -> Self {
        OneForm { w: self.w.scale(c) }
    }

    pub fn embed(&self, e: &Embedding) -> Self {
        OneForm { w: self.w.embed(e) }
    }

    fn nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroForm)
        } else {
            Ok(())
        }
    }

    /// Divisor of the form: zeros minus poles, including the point at
    /// infinity; its degree is always -2.
    pub fn divisor(&self) -> Result<Divisor> {
        self.nonzero()?;
        let mut d = Divisor::new();
        for (q, m) in self.w.num().factor().factors {
            d.add_point(ClosedPoint::Finite(q), m as i64);
        }
        for (q, m) in self.w.den().factor().factors {
            d.add_point(ClosedPoint::Finite(q), -(m as i64));
        }
        d.add_point(ClosedPoint::Infinity, self.order_at_infinity());
        Ok(d)
    }

    /// `ord_inf(w dx) = deg den - deg num - 2`.
    pub fn order_at_infinity(&self) -> i64 {
        self.w.den().deg() as i64 - self.w.num().deg() as i64 - 2
    }

    /// Order of the form at a closed point.
    pub fn order_at(&self, p: &ClosedPoint) -> Result<i64> {
        self.nonzero()?;
        Ok(match p {
            ClosedPoint::Infinity => self.order_at_infinity(),
            ClosedPoint::Finite(q) => {
                self.w.num().multiplicity(q) as i64 - self.w.den().multiplicity(q) as i64
            }
        })
    }

    /// Residue at a closed point (zero away from the poles).
    pub fn residue(&self, p: &ClosedPoint) -> Result<Residue> {
        let field = self.field();
        match p {
            ClosedPoint::Infinity => {
                let (_, r) = self.w.polynomial_part();
                let den = self.w.den();
                let c = if r.degree().is_some_and(|d| d + 1 == den.deg()) {
                    -(&r.lc() / &den.lc())
                } else {
                    field.zero()
                };
                Ok(Residue { point: p.clone(), class: Poly::constant(c) })
            }
            ClosedPoint::Finite(q) => {
                let (_, log) = self.hermite_reduce();
                let (a, b) = (log.w.num(), log.w.den());
                let class = if log.is_zero() || !q.divides(b) {
                    Poly::zero(field)
                } else {
                    let inv = b.derivative().inverse_mod(q).expect("squarefree denominator");
                    (a * &inv).rem(q)?
                };
                Ok(Residue { point: p.clone(), class })
            }
        }
    }

    /// Residues at every pole of the form (including infinity when it is a
    /// pole), in point order.
    pub fn residues(&self) -> Result<Vec<Residue>> {
        self.nonzero()?;
        let mut out = Vec::new();
        for (q, _) in self.w.den().factor().factors {
            out.push(self.residue(&ClosedPoint::Finite(q))?);
        }
        if self.order_at_infinity() < 0 {
            out.push(self.residue(&ClosedPoint::Infinity)?);
        }
        Ok(out)
    }

    /// Hermite reduction `self = dv + w_log` with `w_log` having only simple
    /// poles; the polynomial part of `v` has no constant term.
    pub fn hermite_reduce(&self) -> (RationalFunction, OneForm) {
        hermite::reduce(self)
    }

    /// The residue/logarithmic decomposition `sum a_i du_i/u_i + dv`.
    pub fn log_decompose(&self) -> Result<LogDecomposition> {
        log::decompose(self)
    }

    /// Pullback `f^* self = w(f) f' dx`.
    pub fn pullback(&self, f: &RationalFunction) -> Result<OneForm> {
        if f.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if f.is_constant() {
            return Err(Error::ConstantMap);
        }
        Ok(OneForm { w: self.w.compose(f).checked_mul(&f.derivative())? })
    }
}

/// `f^* w`.
pub fn pullback_form(w: &OneForm, f: &RationalFunction) -> Result<OneForm> {
    w.pullback(f)
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        self.class.is_zero()
    }

    /// The residue as a field element, at points of degree one.
    pub fn value(&self) -> Option<AlgebraicNumber> {
        (self.point.degree() == 1).then(|| {
            let field = self.class.field();
            if self.class.is_zero() {
                field.zero()
            } else {
                self.class.coeff(0)
            }
        })
    }

    /// Sum of the residues at the conjugate points making up the closed point.
    pub fn trace(&self) -> AlgebraicNumber {
        match &self.point {
            ClosedPoint::Infinity => self.class.coeff(0),
            ClosedPoint::Finite(q) => self.class.trace_mod(q),
        }
    }

    /// The residue at one chosen root of the closed point, in an extension
    /// containing that root.
    pub fn at_root(&self) -> Result<(AdjoinedRoot, AlgebraicNumber)> {
        match &self.point {
            ClosedPoint::Infinity => {
                let field = self.class.field();
                let adj = AdjoinedRoot {
                    field: field.clone(),
                    embedding: Embedding::identity(field),
                    root: field.zero(),
                };
                Ok((adj, self.class.coeff(0)))
            }
            ClosedPoint::Finite(q) => {
                let adj = adjoin_root(q)?;
                let v = self.class.embed(&adj.embedding).eval(&adj.root);
                Ok((adj, v))
            }
        }
    }
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) dx", self.w)
    }
}

#[cfg(test)]
mod tests;
