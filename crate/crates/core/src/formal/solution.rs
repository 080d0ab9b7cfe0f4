use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::series::{self, Series};
use super::{chart_derivation, Chart, Point};
use crate::error::{Error, Result};
use crate::field::{adjoin_root, rat, AlgebraicNumber, Embedding, NumberField};
use crate::form::OneForm;
use crate::poly::{Poly, RationalFunction};

/// `sum_k coeffs[k] z^(k/e)`, exact for all `k <= order * e`, expanding the
/// chart coordinate (`x`, or `1/x` near infinity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    pub e: u64,
    pub chart: Chart,
    /// Nonzero coefficients only.
    pub coeffs: BTreeMap<u64, AlgebraicNumber>,
    pub order: u64,
    /// Field of the coefficients and the embedding of the form's field.
    pub field: NumberField,
    pub embedding: Embedding,
}

impl PuiseuxSeries {
    pub fn coefficient(&self, k: u64) -> AlgebraicNumber {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&k| k == 0)
    }

    /// Coefficients of `z^(k/e)` for `k = 0 ..= order * e`.
    pub fn dense(&self) -> Vec<AlgebraicNumber> {
        (0..=self.order * self.e).map(|k| self.coefficient(k)).collect()
    }

    fn from_dense(
        dense: Vec<AlgebraicNumber>,
        e: u64,
        chart: Chart,
        order: u64,
        field: NumberField,
        embedding: Embedding,
    ) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u64, c))
            .collect();
        PuiseuxSeries { e, chart, coeffs, order, field, embedding }
    }
}

/// The formal solution with initial value `p`, through order `order`.
///
/// Where the derivation vanishes (`r >= 1`) this is the constant solution.
/// Otherwise, with `m = 1 - r`, the ansatz `s = s0 + tau V(tau)`,
/// `tau = z^(1/m)`, turns `s' = G(s)` into
/// `V^(m-1) (V + tau V') = m B(tau V)` where `G(s0 + y) = y^r B(y)`; the
/// leading coefficient solves `V_0^m = m B(0)` (a root is adjoined when
/// needed, the branch with `zeta = 1`) and each further `V_k` enters
/// linearly with coefficient `(m + k) V_0^(m-1)`.
pub fn formal_solution(w: &OneForm, p: &Point, order: u64) -> Result<PuiseuxSeries> {
    if order < 1 {
        return Err(crate::error::precondition("order must be at least 1"));
    }
    let (chart, g, s0) = chart_derivation(w, p)?;
    let base = w.field().clone();
    let (r, _) = series::laurent(&g, &s0, 1);
    if r >= 1 {
        return Ok(PuiseuxSeries::from_dense(
            alloc::vec![s0],
            1,
            chart,
            order,
            base.clone(),
            Embedding::identity(&base),
        ));
    }
    let m = (1 - r) as u64;
    let terms = (order * m) as usize;
    // numerator and denominator of B, after removing the powers of y
    let num = g.num().taylor_shift(&s0);
    let den = g.den().taylor_shift(&s0);
    let strip = |p: &Poly| {
        let v = p.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero");
        Poly::from_coeffs(p.field(), p.coeffs()[v..].to_vec())
    };
    let (bn, bd) = (strip(&num), strip(&den));
    let b0 = &bn.coeff(0) / &bd.coeff(0);

    let mut lead = alloc::vec![-&b0.scale(&rat(m as i64))];
    lead.extend((1..m).map(|_| base.zero()));
    lead.push(base.one());
    let root = adjoin_root(&Poly::from_coeffs(&base, lead))?;
    let (field, e) = (root.field, root.embedding);
    let (bn, bd) = (bn.embed(&e), bd.embed(&e));
    let v0 = root.root;
    let lin = &v0.pow(m as i64 - 1)?;

    let mut v: Series = alloc::vec![v0.clone()];
    for k in 1..terms {
        v.push(field.zero());
        let residual = equation(&v, &bn, &bd, m);
        let coeff = lin.scale(&rat((m + k as u64) as i64));
        v[k] = -&(&residual[k] / &coeff);
    }
    let mut dense = alloc::vec![e.apply(&s0)];
    dense.extend(v);
    Ok(PuiseuxSeries::from_dense(dense, m, chart, order, field, e))
}

/// Coefficients of `V^(m-1) (V + tau V') - m B(tau V)` up to `tau^(len V - 1)`.
fn equation(v: &Series, bn: &Poly, bd: &Poly, m: u64) -> Series {
    let field = v[0].field();
    let mut vp = series::zeros(field, v.len());
    vp[0] = field.one();
    for _ in 1..m {
        vp = series::mul(&vp, v);
    }
    let wv: Series = v.iter().enumerate().map(|(k, c)| c.scale(&rat(1 + k as i64))).collect();
    let lhs = series::mul(&vp, &wv);
    let y = series::shift(v, 1);
    let b = series::mul(&series::eval_poly(bn, &y), &series::inv(&series::eval_poly(bd, &y)));
    series::sub(&lhs, &series::scale(&b, &field.from_int(m as i64)))
}

/// Power series solution of `u' = g(u)`, `u(0) = u0`, through `z^order`,
/// from the Lie derivatives `G_1 = g`, `G_(k+1) = G_k' g`:
/// `u_k = G_k(u0) / k!`. With `g = n/d`, `G_k = N_k / d^(2k-1)` and
/// `N_(k+1) = (N_k' d - (2k-1) N_k d') n`.
pub fn series_oracle(g: &RationalFunction, u0: &AlgebraicNumber, order: u64) -> Result<PuiseuxSeries> {
    let field = g.field().clone();
    let (n, d) = (g.num(), g.den());
    let d_at = d.eval(u0);
    if d_at.is_zero() {
        return Err(Error::PoleAtInitialValue);
    }
    let dd = d.derivative();
    let mut dense = alloc::vec![u0.clone()];
    let mut lie = n.clone();
    let mut factorial = rat(1);
    for k in 1..=order {
        factorial *= rat(k as i64);
        let e = 2 * k as i64 - 1;
        let value = &lie.eval(u0) / &d_at.pow(e)?;
        dense.push(value.scale(&(rat(1) / &factorial)));
        lie = &(&(&lie.derivative() * d) - &(&lie * &dd).scale(&field.from_int(e))) * n;
    }
    Ok(PuiseuxSeries::from_dense(dense, 1, Chart::X, order, field.clone(), Embedding::identity(&field)))
}
