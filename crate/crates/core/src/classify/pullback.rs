use alloc::vec::Vec;

use super::{classify, zero_divisor_bound};
use crate::error::{Error, Result};
use crate::field::{linalg, AlgebraicNumber};
use crate::form::OneForm;
use crate::poly::{ClosedPoint, Poly, RationalFunction};

/// Outcome of a pullback search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Successful candidates `f` with `w = f^* eta`, in candidate order.
    pub hits: Vec<(RationalFunction, OneForm)>,
    pub verdict: Newness,
    /// Degree of the zero divisor of the form.
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Newness {
    /// A proper pullback was found.
    Old,
    /// General type with zero-divisor degree at most one: no proper pullback
    /// exists.
    ProvenNew,
    /// Nothing found, but the candidate family is not exhaustive.
    Undecided,
}

/// Finds `eta` with `f^* eta = w`, if it exists.
///
/// The candidate is the trace of `w` along `f` divided by `deg f`. Writing
/// `w = h df`, a pullback forces `h = H(f)`, so `deg H = deg h / deg f` and
/// on every fibre `p - y0 q` the class of `h` is the constant `H(y0)`, which
/// is `Tr(h)(y0) / deg f`. `H` is recovered by exact rational interpolation
/// and the candidate is always verified by an exact pullback.
pub fn pullback_check(w: &OneForm, f: &RationalFunction) -> Result<Option<OneForm>> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    if f.field() != w.field() {
        return Err(Error::FieldMismatch);
    }
    if w.is_zero() {
        return Ok(Some(OneForm::zero(w.field())));
    }
    let h = w.w().checked_div(&f.derivative())?;
    let Some(trace) = normalized_trace(&h, f) else {
        return Ok(None);
    };
    let eta = OneForm::new(trace);
    if &eta.pullback(f)? == w {
        Ok(Some(eta))
    } else {
        Ok(None)
    }
}

/// `Tr(h) / deg f` along `f` as a rational function of the target
/// coordinate, or `None` when `h` is visibly not a function of `f`.
fn normalized_trace(h: &RationalFunction, f: &RationalFunction) -> Option<RationalFunction> {
    let field = h.field();
    let n = f.degree();
    if !h.degree().is_multiple_of(n) {
        return None;
    }
    let d = h.degree() / n;
    let inv_n = field.from_int(n as i64).inverse().ok()?;
    let needed = 2 * d + 2;
    let (p, q) = (f.num(), f.den());
    let mut samples: Vec<(AlgebraicNumber, AlgebraicNumber)> = Vec::with_capacity(needed);
    let mut k = 0i64;
    while samples.len() < needed {
        let y0 = field.from_int(k);
        k = if k > 0 { -k } else { 1 - k };
        let fibre = p - &q.scale(&y0);
        if fibre.deg() != n || !fibre.gcd(h.den()).is_constant() {
            continue;
        }
        let fibre = fibre.monic();
        let class = (h.num() * &h.den().inverse_mod(&fibre)?).rem(&fibre).ok()?;
        if !class.is_constant() {
            return None;
        }
        samples.push((y0, &class.trace_mod(&fibre) * &inv_n));
    }
    interpolate(&samples, d)
}

/// The rational function `N/D` with `deg N, deg D <= d` through the samples.
fn interpolate(samples: &[(AlgebraicNumber, AlgebraicNumber)], d: usize) -> Option<RationalFunction> {
    let field = samples.first()?.0.field().clone();
    // N(y) - v D(y) = 0
    let rows: Vec<Vec<AlgebraicNumber>> = samples
        .iter()
        .map(|(y, v)| {
            let mut pows = Vec::with_capacity(d + 1);
            let mut pow = field.one();
            for _ in 0..=d {
                pows.push(pow.clone());
                pow = &pow * y;
            }
            let mut row = pows.clone();
            row.extend(pows.iter().map(|x| -&(x * v)));
            row
        })
        .collect();
    let sol = linalg::nullspace(rows, 2 * d + 2, &field.zero()).into_iter().next()?;
    let num = Poly::from_coeffs(&field, sol[..=d].to_vec());
    let den = Poly::from_coeffs(&field, sol[d + 1..].to_vec());
    RationalFunction::new(num, den).ok()
}

/// Candidate maps `lambda^d` where `lambda` sends one rational support point
/// of the divisor to 0 and another to infinity.
fn builtin_candidates(w: &OneForm, max_degree: usize) -> Result<Vec<RationalFunction>> {
    let field = w.field();
    let points: Vec<Option<AlgebraicNumber>> = w
        .divisor()?
        .support()
        .into_iter()
        .filter_map(|p| match p {
            ClosedPoint::Infinity => Some(None),
            ClosedPoint::Finite(q) if q.deg() == 1 => Some(Some(-q.coeff(0))),
            ClosedPoint::Finite(_) => None,
        })
        .collect();
    let mut out = Vec::new();
    for (i, zero) in points.iter().enumerate() {
        for (j, pole) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let top = match zero {
                Some(a) => Poly::linear(a),
                None => Poly::one(field),
            };
            let bottom = match pole {
                Some(b) => Poly::linear(b),
                None => Poly::one(field),
            };
            let lambda = RationalFunction::new(top, bottom)?;
            for d in 2..=max_degree {
                out.push(lambda.pow(d as i64)?);
            }
        }
    }
    Ok(out)
}

/// Runs [`pullback_check`] over built-in candidates up to `max_degree` (capped
/// by the zero-divisor bound for general-type forms) and the given
/// candidates, ordered by degree and then coefficients.
pub fn pullback_search(
    w: &OneForm,
    max_degree: usize,
    candidates: &[RationalFunction],
) -> Result<SearchResult> {
    if w.is_zero() {
        return Err(Error::ZeroForm);
    }
    let general = classify(w)?.is_general_type();
    let bound = zero_divisor_bound(w)?;
    let cap = if general { max_degree.min(bound) } else { max_degree };
    let mut all = builtin_candidates(w, cap)?;
    all.extend(candidates.iter().filter(|f| f.degree() >= 2).cloned());
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();

    let mut hits = Vec::new();
    for f in all {
        if let Some(eta) = pullback_check(w, &f)? {
            hits.push((f, eta));
        }
    }
    let verdict = if !hits.is_empty() {
        Newness::Old
    } else if general && bound <= 1 {
        Newness::ProvenNew
    } else {
        Newness::Undecided
    };
    Ok(SearchResult { hits, verdict, bound })
}

