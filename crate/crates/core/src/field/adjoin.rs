//! Adjoining roots of polynomials: simple extensions built with primitive
//! elements, and splitting fields.

use alloc::vec::Vec;

use super::{rat, AlgebraicNumber, Embedding, NumberField};
use crate::error::{precondition, Result};
use crate::poly::Poly;

/// A field containing a root of a given polynomial.
#[derive(Clone, Debug)]
pub struct AdjoinedRoot {
    pub field: NumberField,
    /// Embedding of the polynomial's field into `field`.
    pub embedding: Embedding,
    pub root: AlgebraicNumber,
}

/// A field over which a polynomial splits into linear factors.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub field: NumberField,
    pub embedding: Embedding,
    /// Distinct roots, sorted.
    pub roots: Vec<AlgebraicNumber>,
}

/// Smallest extension (up to the choice of factor) containing a root of
/// `poly`. When `poly` has a root in its own field, that field is returned
/// with the identity embedding. Otherwise a root of an irreducible factor of
/// least degree is adjoined.
pub fn adjoin_root(poly: &Poly) -> Result<AdjoinedRoot> {
    if poly.is_constant() {
        return Err(precondition("constant polynomial has no roots"));
    }
    let base = poly.field();
    let factors = poly.factor().factors;
    let h = factors
        .iter()
        .map(|(f, _)| f)
        .min_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.cmp(b)))
        .expect("nonconstant polynomial has a factor");
    if h.deg() == 1 {
        return Ok(AdjoinedRoot {
            field: base.clone(),
            embedding: Embedding::identity(base),
            root: -h.coeff(0),
        });
    }
    Ok(adjoin_irreducible(h))
}

/// Adjoins a root of a monic irreducible `h` of degree at least two.
fn adjoin_irreducible(h: &Poly) -> AdjoinedRoot {
    let base = h.field();
    if base.is_rationals() {
        let field = NumberField::new_unchecked(h.rational_coeffs().expect("rational field"));
        let root = field.generator();
        let embedding = Embedding::new_unchecked(base.clone(), field.one());
        return AdjoinedRoot { field, embedding, root };
    }
    let mut k = 0i64;
    loop {
        let norm = crate::poly::shifted_norm(h, k);
        if norm.gcd(&norm.derivative()).is_constant() {
            let field = NumberField::new_unchecked(norm.rational_coeffs().expect("norm is rational"));
            let gamma = field.generator();
            let alpha = base_generator_image(h, k, &field);
            let embedding = Embedding::new_unchecked(base.clone(), alpha.clone());
            let root = &gamma - &alpha.scale(&rat(k));
            return AdjoinedRoot { field, embedding, root };
        }
        k = if k > 0 { -k } else { 1 - k };
    }
}

/// Image of the base generator in `L = Q(gamma)`, `gamma = beta + k alpha`:
/// the common root of `m(y)` and `h(gamma - k y)`.
fn base_generator_image(h: &Poly, k: i64, field: &NumberField) -> AlgebraicNumber {
    let base = h.field();
    let to_l = |coords: &[super::Rational]| -> Poly {
        Poly::from_coeffs(field, coords.iter().map(|c| field.from_rational(c.clone())).collect())
    };
    let m = to_l(base.modulus());
    let lin = Poly::from_coeffs(field, alloc::vec![field.generator(), field.from_int(-k)]);
    let mut acc = Poly::zero(field);
    let mut power = Poly::one(field);
    for c in h.coeffs() {
        acc = &acc + &(&to_l(c.coords()) * &power);
        power = &power * &lin;
    }
    let g = m.gcd(&acc);
    debug_assert_eq!(g.deg(), 1, "primitive element recovers the base generator");
    -g.coeff(0)
}

/// Extends the polynomial's field until the polynomial splits.
pub fn split_completely(poly: &Poly) -> Result<Splitting> {
    if poly.is_zero() {
        return Err(precondition("zero polynomial"));
    }
    let base = poly.field().clone();
    let mut embedding = Embedding::identity(&base);
    let mut p = poly.clone();
    loop {
        let factors = p.factor().factors;
        match factors.iter().find(|(f, _)| f.deg() > 1) {
            None => {
                let mut roots: Vec<AlgebraicNumber> = factors.iter().map(|(f, _)| -f.coeff(0)).collect();
                roots.sort();
                return Ok(Splitting { field: p.field().clone(), embedding, roots });
            }
            Some((h, _)) => {
                let adj = adjoin_irreducible(h);
                embedding = embedding.then(&adj.embedding);
                p = poly.embed(&embedding);
            }
        }
    }
}

/// Splits several polynomials over one common extension.
pub fn split_all(polys: &[Poly], base: &NumberField) -> Result<Splitting> {
    let mut prod = Poly::one(base);
    for p in polys {
        if p.is_zero() {
            return Err(precondition("zero polynomial"));
        }
        for (f, _) in p.squarefree() {
            if prod.gcd(&f).is_constant() {
                prod = &prod * &f;
            } else {
                prod = &prod * &f.exact_div(&prod.gcd(&f));
            }
        }
    }
    split_completely(&prod)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_root_stays_in_q() {
        let q = NumberField::rationals();
        let a = adjoin_root(&Poly::from_ints(&q, &[-6, 1, 1])).unwrap();
        assert!(a.field.is_rationals());
        let r = a.root.to_rational().unwrap();
        assert!(r == crate::field::rat(2) || r == crate::field::rat(-3));
    }

    #[test]
    fn quadratic_extension() {
        let q = NumberField::rationals();
        let f = Poly::from_ints(&q, &[-2, 0, 1]);
        let a = adjoin_root(&f).unwrap();
        assert_eq!(a.field.degree(), 2);
        assert!(f.embed(&a.embedding).eval(&a.root).is_zero());
    }

    #[test]
    fn tower_to_primitive_element() {
        let q = NumberField::rationals();
        let k = adjoin_root(&Poly::from_ints(&q, &[-2, 0, 1])).unwrap();
        let g = Poly::from_ints(&k.field, &[-3, 0, 1]);
        let l = adjoin_root(&g).unwrap();
        assert_eq!(l.field.degree(), 4);
        assert!(g.embed(&l.embedding).eval(&l.root).is_zero());
        // sqrt2 still squares to 2 in the big field
        let s = l.embedding.apply(&k.root);
        assert_eq!(&s * &s, l.field.from_int(2));
        assert_eq!(l.embedding.preimage(&s), Some(k.root.clone()));
        assert_eq!(l.embedding.preimage(&l.root), None);
    }

    #[test]
    fn splitting_field_of_cubic() {
        let q = NumberField::rationals();
        let f = Poly::from_ints(&q, &[-2, 0, 0, 1]);
        let s = split_completely(&f).unwrap();
        assert_eq!(s.field.degree(), 6);
        assert_eq!(s.roots.len(), 3);
        let fe = f.embed(&s.embedding);
        assert!(s.roots.iter().all(|r| fe.eval(r).is_zero()));
    }
}
