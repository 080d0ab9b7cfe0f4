use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::OneForm;
use crate::error::{Error, Result};
use crate::field::{split_completely, z_module_basis, AlgebraicNumber, Embedding, NumberField};
use crate::poly::{BiPoly, ClosedPoint, Divisor, Poly, RationalFunction};

/// `w = sum_i a_i du_i/u_i + dv`, with the `a_i` a Z-basis of the group
/// generated by the residues and `div(u_i) = R_i`.
///
/// The residues may require an extension `L` of the form's field `K`; the
/// basis and the `u_i` live in `L`, `v` in `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDecomposition {
    pub field: NumberField,
    /// Embedding of the form's field into `field`.
    pub embedding: Embedding,
    pub v: RationalFunction,
    pub basis: Vec<AlgebraicNumber>,
    pub terms: Vec<LogTerm>,
    /// Distinct finite residues `c_j` with `g_j = gcd(b, a - c_j b')`, the
    /// monic polynomial whose roots carry residue `c_j`.
    pub residue_parts: Vec<(AlgebraicNumber, Poly)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTerm {
    pub u: RationalFunction,
    pub divisor: Divisor,
}

impl LogDecomposition {
    /// `dv + sum a_i du_i/u_i`, over the extension field.
    pub fn reconstruct(&self) -> OneForm {
        let mut acc = OneForm::differential(&self.v.embed(&self.embedding));
        for (a, t) in self.basis.iter().zip(&self.terms) {
            let term = OneForm::dlog(&t.u).expect("nonconstant u").scale(a);
            acc = acc.checked_add(&term).expect("same field");
        }
        acc
    }

    /// Whether the decomposition reconstructs `w` exactly.
    pub fn reconstructs(&self, w: &OneForm) -> bool {
        w.field() == self.embedding.source() && self.reconstruct() == w.embed(&self.embedding)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// The Rothstein-Trager resultant `res_x(b, a - t b')` of `a/b dx`.
pub(crate) fn rothstein_trager(a: &Poly, b: &Poly) -> Poly {
    let field = a.field();
    let db = b.derivative();
    let n = a.coeffs().len().max(db.coeffs().len());
    let rhs = BiPoly::new(
        field,
        (0..n)
            .map(|i| Poly::from_coeffs(field, alloc::vec![a.coeff(i), -db.coeff(i)]))
            .collect(),
    );
    BiPoly::from_x(b).resultant_x(&rhs)
}

pub(super) fn decompose(form: &OneForm) -> Result<LogDecomposition> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let base = form.field().clone();
    let (v, log) = form.hermite_reduce();
    if log.is_zero() {
        return Ok(LogDecomposition {
            field: base.clone(),
            embedding: Embedding::identity(&base),
            v,
            basis: Vec::new(),
            terms: Vec::new(),
            residue_parts: Vec::new(),
        });
    }
    let (a, b) = (log.w().num(), log.w().den());
    let r = rothstein_trager(a, b);
    let r_sf = r.exact_div(&r.gcd(&r.derivative()));
    let split = split_completely(&r_sf)?;
    let e = split.embedding;
    let (a, b) = (a.embed(&e), b.embed(&e));
    let db = b.derivative();

    let mut parts = Vec::new();
    for c in split.roots {
        let g = b.gcd(&(&a - &db.scale(&c)));
        if !g.is_constant() {
            parts.push((c, g));
        }
    }
    let values: Vec<AlgebraicNumber> = parts.iter().map(|(c, _)| c.clone()).collect();
    let zb = z_module_basis(&values)?;
    let coords: Vec<Vec<i64>> = zb
        .coords
        .iter()
        .map(|row| row.iter().map(|x| x.to_i64().expect("small coordinate")).collect())
        .collect();

    let points: Vec<Vec<Poly>> =
        parts.iter().map(|(_, g)| g.factor().factors.into_iter().map(|(p, _)| p).collect()).collect();
    let mut terms = Vec::new();
    for (i, _) in zb.basis.iter().enumerate() {
        let mut num = Poly::one(&split.field);
        let mut den = Poly::one(&split.field);
        let mut divisor = Divisor::new();
        let mut at_inf = 0i64;
        for (j, (_, g)) in parts.iter().enumerate() {
            let k = coords[j][i];
            if k > 0 {
                num = &num * &g.pow(k as usize);
            } else if k < 0 {
                den = &den * &g.pow(k.unsigned_abs() as usize);
            }
            for p in &points[j] {
                divisor.add_point(ClosedPoint::Finite(p.clone()), k);
            }
            at_inf -= k * g.deg() as i64;
        }
        divisor.add_point(ClosedPoint::Infinity, at_inf);
        terms.push(LogTerm { u: RationalFunction::new(num, den)?, divisor });
    }
    Ok(LogDecomposition {
        field: split.field,
        embedding: e,
        v,
        basis: zb.basis,
        terms,
        residue_parts: parts,
    })
}
