use alloc::vec::Vec;

use super::series::{self, Series};
use super::{chart_derivation, Case, LocalData, Point};
use crate::error::{precondition, Result};
use crate::field::{adjoin_root, rat, AlgebraicNumber, Embedding, NumberField, Rational};
use crate::form::OneForm;
use crate::poly::Poly;

/// A parameter `T` at a point putting the derivation into normal form,
/// known through order `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub local: LocalData,
    /// Field of the coefficients of `T`, with the embedding of the form's
    /// field (a root of the leading coefficient may have been adjoined).
    pub field: NumberField,
    pub embedding: Embedding,
    /// Coefficients of `T(t)` for `t^0 .. t^(order+1)`, `t` the chart
    /// parameter centred at the point.
    pub parameter: Vec<AlgebraicNumber>,
    /// In case II, the coefficients of `T^(1-r)` (over the form's field) for
    /// `t^0 .. t^(order+1-r)`.
    pub power: Option<Vec<AlgebraicNumber>>,
    /// `D(t) = t^r (b_0 + b_1 t + ...)`: the coefficients `b_0 .. b_order`.
    pub derivation: Vec<AlgebraicNumber>,
    pub order: usize,
}

/// The normal form of the derivation dual to `w` at `p` (cases I, II, III),
/// with `T` computed through order `order` by the coefficient recursions.
/// In case III the free coefficient of `t^0` in `T^(1-r)` is set to zero.
pub fn normal_form(w: &OneForm, p: &Point, order: usize) -> Result<NormalForm> {
    if order < 1 {
        return Err(precondition("order must be at least 1"));
    }
    let (_, g, s0) = chart_derivation(w, p)?;
    let base = w.field().clone();
    let n = order + 1;
    let (r, b) = series::laurent(&g, &s0, n);
    let b0 = b[0].clone();

    match r {
        1 => {
            let c = b0.clone();
            let quotient = series::scale(&series::inv(&b), &c);
            let mut a = series::zeros(&base, n);
            for k in 1..n {
                a[k] = quotient[k].scale(&Rational::new(1.into(), (k as i64).into()));
            }
            let t = series::shift(&extend(&series::exp(&a)), 1);
            Ok(NormalForm {
                local: LocalData { point: p.clone(), r, case: Case::I, c: Some(c) },
                field: base.clone(),
                embedding: Embedding::identity(&base),
                parameter: t,
                power: None,
                derivation: b,
                order,
            })
        }
        r if r < 1 => {
            let m = 1 - r;
            let beta = series::inv(&b);
            let wser: Series = (0..n)
                .map(|k| beta[k].scale(&Rational::new(m.into(), (m + k as i64).into())))
                .collect();
            let w0 = wser[0].clone();
            let unit = series::scale(&wser, &w0.inverse()?);
            let root = root_of(&w0, m)?;
            let e = root.embedding.clone();
            let unit_e: Series = unit.iter().map(|x| e.apply(x)).collect();
            let t = series::shift(&extend(&series::scale(&series::pow_frac(&unit_e, 1, m), &root.root)), 1);
            let mut power = series::zeros(&base, m as usize);
            power.extend(wser);
            Ok(NormalForm {
                local: LocalData { point: p.clone(), r, case: Case::II, c: None },
                field: root.field,
                embedding: e,
                parameter: t,
                power: Some(power),
                derivation: b,
                order,
            })
        }
        _ => {
            let k_max = order.max((r - 1) as usize);
            let bb = if b.len() > k_max { b.clone() } else { series::laurent(&g, &s0, k_max + 1).1 };
            let one_r = rat(1 - r);
            let mut u = alloc::vec![b0.inverse()?];
            let mut c = base.zero();
            for k in 1..=k_max {
                let mut partial = base.zero();
                for (j, uj) in u.iter().enumerate() {
                    partial = &partial + &(uj * &bb[k - j]).scale(&rat(1 - r + j as i64));
                }
                if k as i64 == r - 1 {
                    c = (&partial * &b0.inverse()?).scale(&(rat(1) / &one_r));
                    u.push(base.zero());
                    continue;
                }
                let rhs = if k as i64 > r - 1 {
                    let need = (k as i64 - r + 2) as usize;
                    let inv_u = series::inv(&u[..need].to_vec());
                    (&c * &inv_u[need - 1]).scale(&one_r)
                } else {
                    base.zero()
                };
                let denom = b0.scale(&rat(1 - r + k as i64));
                u.push(&(&rhs - &partial) * &denom.inverse()?);
            }
            u.truncate(n);
            let unit = series::scale(&u, &b0);
            let root = root_of(&b0, r - 1)?;
            let e = root.embedding.clone();
            let unit_e: Series = unit.iter().map(|x| e.apply(x)).collect();
            let t = series::shift(&extend(&series::scale(&series::pow_frac(&unit_e, -1, r - 1), &root.root)), 1);
            Ok(NormalForm {
                local: LocalData { point: p.clone(), r, case: Case::III, c: Some(c) },
                field: root.field,
                embedding: e,
                parameter: t,
                power: None,
                derivation: bb[..n].to_vec(),
                order,
            })
        }
    }
}

/// Appends a zero so that shifting by `t` keeps every known coefficient.
fn extend(s: &Series) -> Series {
    let mut out = s.clone();
    out.push(s[0].zero_like());
    out
}

/// A root of `y^m = a`.
fn root_of(a: &AlgebraicNumber, m: i64) -> Result<crate::field::AdjoinedRoot> {
    let field = a.field();
    let mut coeffs = alloc::vec![-a];
    coeffs.extend((1..m).map(|_| field.zero()));
    coeffs.push(field.one());
    adjoin_root(&Poly::from_coeffs(field, coeffs))
}

impl NormalForm {
    /// Recomputes `D(T) = T'(t) D(t)` and compares it with the normal form
    /// (`cT`, `T^r` or `T^r + c T^(2r-1)`) through order `order`, both sides
    /// divided by `t^r`.
    pub fn verify(&self) -> bool {
        let n = self.order + 1;
        let e = &self.embedding;
        let b: Series = self.derivation.iter().map(|x| e.apply(x)).collect();
        let t = &self.parameter;
        let lhs = series::mul(&series::derivative(t)[..n].to_vec(), &b);
        let unit: Series = t[1..=n].to_vec();
        let r = self.local.r;
        let c = self.local.c.as_ref().map(|c| e.apply(c));
        let rhs = match self.local.case {
            Case::I => series::scale(&unit, c.as_ref().expect("case I has c")),
            Case::II => int_pow(&unit, r),
            Case::III => {
                let c = c.expect("case III has c");
                let tail = series::shift(&series::scale(&int_pow(&unit, 2 * r - 1), &c), (r - 1) as usize);
                series::add(&int_pow(&unit, r), &tail)
            }
        };
        lhs == rhs
    }

    /// In case II, checks `D(T^(1-r)) = 1 - r` through order `order`.
    pub fn verify_power(&self) -> bool {
        let Some(s) = &self.power else { return false };
        let n = self.order + 1;
        let m = (1 - self.local.r) as usize;
        // S' D(t) = S' t^r B, with S' = t^(m-1) (...)
        let ds = series::derivative(s);
        let lhs = series::mul(&ds[m - 1..m - 1 + n].to_vec(), &self.derivation);
        let field = s[0].field();
        let mut rhs = series::zeros(field, n);
        rhs[0] = field.from_int(m as i64);
        lhs == rhs
    }
}

fn int_pow(a: &Series, k: i64) -> Series {
    let base = if k < 0 { series::inv(a) } else { a.clone() };
    let field = a[0].field();
    let mut acc = series::zeros(field, a.len());
    acc[0] = field.one();
    for _ in 0..k.unsigned_abs() {
        acc = series::mul(&acc, &base);
    }
    acc
}
