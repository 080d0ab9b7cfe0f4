//! Exact / exponential / general type, pullbacks along rational maps and
//! Moebius isomorphisms between forms.
//!
//! On the projective line there is no nonconstant map to an elliptic curve,
//! so the Weierstrass type never occurs and is not represented.

mod isomorphism;
mod pullback;

pub use isomorphism::{isomorphism_solve, Mobius};
pub use pullback::{pullback_check, pullback_search, Newness, SearchResult};

use crate::error::{Error, Result};
use crate::field::{AlgebraicNumber, Embedding};
use crate::form::OneForm;
use crate::poly::{BiPoly, Poly, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `w = dv`.
    Exact { v: RationalFunction },
    /// `w = df/(c f)`. When the residues are irrational, `c` and `f` live in
    /// an extension given by `embedding` (the identity otherwise).
    Exponential { c: AlgebraicNumber, f: RationalFunction, embedding: Embedding },
    GeneralType,
}

impl Classification {
    pub fn is_general_type(&self) -> bool {
        matches!(self, Classification::GeneralType)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Classification::Exact { .. } => "exact",
            Classification::Exponential { .. } => "exponential",
            Classification::GeneralType => "general type",
        }
    }
}

/// Classifies a nonzero form. Exact and exponential verdicts are verified by
/// recomputing `dv` resp. `df/(cf)`.
pub fn classify(w: &OneForm) -> Result<Classification> {
    if w.is_zero() {
        return Err(Error::ZeroForm);
    }
    let (v, log) = w.hermite_reduce();
    if log.is_zero() {
        assert_eq!(&OneForm::differential(&v), w, "exact verdict verifies");
        return Ok(Classification::Exact { v });
    }
    // df/(cf) has only simple poles, so a nonzero exact part rules it out
    if !v.is_zero() {
        return Ok(Classification::GeneralType);
    }
    let r = crate::form::rothstein_trager(log.w().num(), log.w().den());
    if !residues_commensurable(&r) {
        return Ok(Classification::GeneralType);
    }
    let d = w.log_decompose()?;
    if d.rank() != 1 {
        return Ok(Classification::GeneralType);
    }
    let c = d.basis[0].inverse()?;
    let f = d.terms[0].u.clone();
    let candidate = OneForm::dlog(&f)?.scale(&d.basis[0]);
    if candidate != w.embed(&d.embedding) {
        return Ok(Classification::GeneralType);
    }
    Ok(Classification::Exponential { c, f, embedding: d.embedding })
}

/// Whether all roots of `r` are rational multiples of each other: the ratio
/// polynomial `res_s(r(s), r(t s))`, whose roots are all quotients of roots,
/// must split into rational linear factors.
fn residues_commensurable(r: &Poly) -> bool {
    let field = r.field();
    let r = r.exact_div(&r.gcd(&r.derivative()));
    let q = BiPoly::new(field, r.coeffs().iter().map(|c| Poly::constant(c.clone())).collect());
    let scaled = BiPoly::new(
        field,
        r.coeffs().iter().enumerate().map(|(i, c)| Poly::monomial(c.clone(), i)).collect(),
    );
    let ratios = scaled.resultant_x(&q).monic();
    match ratios.rational_coeffs() {
        None => false,
        Some(_) => ratios.factor_q().is_ok_and(|fs| fs.iter().all(|(f, _)| f.deg() == 1)),
    }
}

/// Degree of the divisor of zeros of the form. A general-type form written
/// as a pullback `f^* eta` with `eta` of general type has `deg f` at most
/// this value; a value of at most one certifies that the form is new.
pub fn zero_divisor_bound(w: &OneForm) -> Result<usize> {
    Ok(w.divisor()?.positive_part().degree() as usize)
}
