use alloc::vec::Vec;
use core::fmt;

use super::classify;
use crate::error::{Error, Result};
use crate::field::{split_all, AlgebraicNumber, Embedding, NumberField};
use crate::form::OneForm;
use crate::poly::{ClosedPoint, Poly, RationalFunction};

/// `x -> (a x + b)/(c x + d)` with `ad - bc != 0`, normalized so that the
/// first nonzero entry of `(a, b, c, d)` is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mobius {
    pub a: AlgebraicNumber,
    pub b: AlgebraicNumber,
    pub c: AlgebraicNumber,
    pub d: AlgebraicNumber,
}

impl Mobius {
    pub fn new(a: AlgebraicNumber, b: AlgebraicNumber, c: AlgebraicNumber, d: AlgebraicNumber) -> Result<Self> {
        let field = a.field();
        if [&b, &c, &d].iter().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if (&(&a * &d) - &(&b * &c)).is_zero() {
            return Err(Error::DegenerateMobius);
        }
        let lead = [&a, &b, &c, &d].into_iter().find(|x| !x.is_zero()).expect("nonzero determinant").inverse()?;
        Ok(Mobius { a: &a * &lead, b: &b * &lead, c: &c * &lead, d: &d * &lead })
    }

    pub fn identity(field: &NumberField) -> Self {
        Mobius { a: field.one(), b: field.zero(), c: field.zero(), d: field.one() }
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let field = self.field();
        let num = Poly::from_coeffs(field, alloc::vec![self.b.clone(), self.a.clone()]);
        let den = Poly::from_coeffs(field, alloc::vec![self.d.clone(), self.c.clone()]);
        RationalFunction::new(num, den).expect("nonzero denominator")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        let m = mat_mul(&self.matrix(), &other.matrix());
        let [[a, b], [c, d]] = m;
        Mobius::new(a, b, c, d).expect("product of invertible maps")
    }

    fn matrix(&self) -> [[AlgebraicNumber; 2]; 2] {
        [[self.a.clone(), self.b.clone()], [self.c.clone(), self.d.clone()]]
    }

    /// Coefficients pulled back along an embedding, when they lie in its image.
    fn descend(&self, e: &Embedding) -> Option<Mobius> {
        Some(Mobius {
            a: e.preimage(&self.a)?,
            b: e.preimage(&self.b)?,
            c: e.preimage(&self.c)?,
            d: e.preimage(&self.d)?,
        })
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}", self.to_rational_function())
    }
}

type Mat = [[AlgebraicNumber; 2]; 2];

fn mat_mul(x: &Mat, y: &Mat) -> Mat {
    let e = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Matrix sending `z1, z2, z3` to `0, 1, infinity` (`None` is infinity).
fn to_standard(z: [&Option<AlgebraicNumber>; 3], field: &NumberField) -> Mat {
    let (zero, one) = (field.zero(), field.one());
    match z {
        [None, Some(z2), Some(z3)] => [[zero, z2 - z3], [one, -z3]],
        [Some(z1), None, Some(z3)] => [[one.clone(), -z1], [one, -z3]],
        [Some(z1), Some(z2), None] => [[one, -z1], [zero, z2 - z1]],
        [Some(z1), Some(z2), Some(z3)] => {
            let (u, v) = (z2 - z3, z2 - z1);
            [[u.clone(), -&(z1 * &u)], [v.clone(), -&(z3 * &v)]]
        }
        _ => unreachable!("points are distinct"),
    }
}

fn adjugate(m: &Mat) -> Mat {
    [[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]]
}

/// Support of a divisor as geometric points over `field`, with multiplicity.
fn geometric_support(w: &OneForm, e: &Embedding) -> Result<Vec<(Option<AlgebraicNumber>, i64)>> {
    let mut out = Vec::new();
    for (p, m) in w.divisor()?.iter() {
        match p {
            ClosedPoint::Infinity => out.push((None, m)),
            ClosedPoint::Finite(q) => {
                for r in q.embed(e).roots() {
                    out.push((Some(r), m));
                }
            }
        }
    }
    Ok(out)
}

/// All Moebius maps `phi` with `phi^* w2 = w1`, for forms of general type.
///
/// Such a map sends the support of `div(w1)` onto that of `div(w2)`
/// preserving multiplicities, so it is determined by the images of three
/// support points; each multiplicity-compatible assignment is interpolated
/// and verified exactly. Coefficients are returned in the forms' field when
/// they lie there, otherwise in the splitting field of the supports.
pub fn isomorphism_solve(w1: &OneForm, w2: &OneForm) -> Result<Vec<Mobius>> {
    if w1.is_zero() || w2.is_zero() {
        return Err(Error::ZeroForm);
    }
    if w1.field() != w2.field() {
        return Err(Error::FieldMismatch);
    }
    if !classify(w1)?.is_general_type() || !classify(w2)?.is_general_type() {
        return Err(Error::NotGeneralType);
    }
    let base = w1.field().clone();
    let (d1, d2) = (w1.divisor()?, w2.divisor()?);
    let polys: Vec<Poly> = d1
        .support()
        .into_iter()
        .chain(d2.support())
        .filter_map(|p| match p {
            ClosedPoint::Finite(q) => Some(q),
            ClosedPoint::Infinity => None,
        })
        .collect();
    let split = split_all(&polys, &base)?;
    let (field, e) = (split.field, split.embedding);
    let s1 = geometric_support(w1, &e)?;
    let s2 = geometric_support(w2, &e)?;
    let count = |s: &[(Option<AlgebraicNumber>, i64)], m: i64| s.iter().filter(|x| x.1 == m).count();
    let mut mults1: Vec<i64> = s1.iter().map(|x| x.1).collect();
    let mut mults2: Vec<i64> = s2.iter().map(|x| x.1).collect();
    mults1.sort();
    mults2.sort();
    if mults1 != mults2 || s1.len() < 3 {
        return Ok(Vec::new());
    }

    // anchor on the three points with the rarest multiplicities
    let mut order: Vec<usize> = (0..s1.len()).collect();
    order.sort_by_key(|&i| (count(&s1, s1[i].1), i));
    let anchors = [order[0], order[1], order[2]];
    let src = to_standard([&s1[anchors[0]].0, &s1[anchors[1]].0, &s1[anchors[2]].0], &field);

    let (w1e, w2e) = (w1.embed(&e), w2.embed(&e));
    let mut found = Vec::new();
    let choices = |k: usize| -> Vec<usize> { (0..s2.len()).filter(|&j| s2[j].1 == s1[anchors[k]].1).collect() };
    for i in choices(0) {
        for j in choices(1) {
            if j == i {
                continue;
            }
            for k in choices(2) {
                if k == i || k == j {
                    continue;
                }
                let dst = to_standard([&s2[i].0, &s2[j].0, &s2[k].0], &field);
                let [[a, b], [c, d]] = mat_mul(&adjugate(&dst), &src);
                let Ok(phi) = Mobius::new(a, b, c, d) else { continue };
                if w2e.pullback(&phi.to_rational_function())? == w1e {
                    found.push(phi);
                }
            }
        }
    }
    if let Some(mut down) = found.iter().map(|m| m.descend(&e)).collect::<Option<Vec<_>>>() {
        found = core::mem::take(&mut down);
    }
    found.sort();
    found.dedup();
    Ok(found)
}
