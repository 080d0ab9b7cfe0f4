use autoform_core::classify::{classify, isomorphism_solve};
use autoform_core::field::{linalg, z_module_basis};
use autoform_core::form::pullback_form;
use autoform_core::formal::{local_order, ramification_exponent};
use autoform_core::poly::resultant::resultant;
use autoform_core::{AlgebraicNumber, ClosedPoint, NumberField, OneForm, Poly, Rational, RationalFunction};
use proptest::prelude::*;

fn q() -> NumberField {
    NumberField::rationals()
}

fn field(modulus: &[i64]) -> NumberField {
    NumberField::new(modulus.iter().map(|&c| Rational::from_integer(c.into())).collect()).unwrap()
}

fn fields() -> impl Strategy<Value = NumberField> {
    prop_oneof![Just(q()), Just(field(&[-2, 0, 1])), Just(field(&[-1, -1, 0, 1]))]
}

fn element(k: NumberField) -> impl Strategy<Value = AlgebraicNumber> {
    let d = k.degree();
    prop::collection::vec((-9i64..=9, 1i64..=5), d)
        .prop_map(move |c| k.element(&c.iter().map(|&(p, r)| Rational::new(p.into(), r.into())).collect::<Vec<_>>()))
}

fn poly_over(k: NumberField, max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(element(k.clone()), 1..=max_deg + 1).prop_map(move |c| Poly::from_coeffs(&k, c))
}

fn int_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1)
        .prop_map(|c| Poly::from_ints(&q(), &c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant(max_deg: usize) -> impl Strategy<Value = Poly> {
    int_poly(max_deg).prop_filter("nonconstant", |p| p.deg() >= 1)
}

fn triple() -> impl Strategy<Value = (AlgebraicNumber, AlgebraicNumber, AlgebraicNumber)> {
    fields().prop_flat_map(|k| (element(k.clone()), element(k.clone()), element(k)))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn z_module_basis_reconstructs(elems in fields().prop_flat_map(|k| prop::collection::vec(element(k), 1..=4))) {
        let zb = z_module_basis(&elems).unwrap();
        let k = elems[0].field().clone();
        for (e, row) in elems.iter().zip(&zb.coords) {
            let back = zb.basis.iter().zip(row).fold(k.zero(), |acc, (b, n)| {
                &acc + &b.scale(&Rational::from_integer(n.clone()))
            });
            prop_assert_eq!(&back, e);
        }
        let rows: Vec<Vec<AlgebraicNumber>> =
            zb.basis.iter().map(|b| b.coords().iter().map(|c| q().from_rational(c.clone())).collect()).collect();
        prop_assert_eq!(linalg::rank(rows, k.degree()), zb.basis.len());
    }

    #[test]
    fn factorization_multiplies_back(f in int_poly(6)) {
        let fac = f.factor_q().unwrap();
        let product = fac.iter().fold(Poly::constant(f.lc()), |acc, (p, m)| &acc * &p.pow(*m));
        prop_assert_eq!(&product, &f);
        let sqf = f.squarefree().into_iter().fold(Poly::constant(f.lc()), |acc, (p, m)| &acc * &p.pow(m));
        prop_assert_eq!(sqf, f);
    }

    #[test]
    fn factorization_over_extensions(f in poly_over(field(&[-2, 0, 1]), 4).prop_filter("nonzero", |p| !p.is_zero())) {
        let fac = f.factor();
        let product = fac.factors.iter().fold(Poly::constant(fac.unit.clone()), |acc, (p, m)| &acc * &p.pow(*m));
        prop_assert_eq!(product, f);
    }

    #[test]
    fn gcd_properties(a in int_poly(4), b in int_poly(4), c in nonconstant(3)) {
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!((&a * &c).gcd(&(&b * &c)), (&g * &c).monic());
    }

    #[test]
    fn resultant_detects_common_factors(a in nonconstant(3), b in nonconstant(3), c in nonconstant(2)) {
        let planted = resultant((&a * &c).coeffs(), (&b * &c).coeffs());
        prop_assert!(planted.is_zero());
        let r = resultant(a.coeffs(), b.coeffs());
        prop_assert_eq!(r.is_zero(), !a.gcd(&b).is_constant());
    }

    #[test]
    fn log_derivative_residues_are_orders(num in nonconstant(3), den in nonconstant(3)) {
        let u = RationalFunction::new(num, den).unwrap();
        prop_assume!(!u.is_constant());
        let w = OneForm::dlog(&u).unwrap();
        for r in w.residues().unwrap() {
            let ord = ord_of(&u, &r.point);
            prop_assert_eq!(r.class.clone(), Poly::constant(q().from_int(ord)));
        }
    }

    #[test]
    fn hermite_log_part_is_simple(num in int_poly(4), den in nonconstant(5)) {
        let w = OneForm::new(RationalFunction::new(num, den).unwrap());
        let (v, log) = w.hermite_reduce();
        prop_assert_eq!(OneForm::differential(&v), w.checked_sub(&log).unwrap());
        let den = log.w().den();
        prop_assert!(den.gcd(&den.derivative()).is_constant());
    }

    #[test]
    fn exact_and_exponential_closed_under_pullback(
        v in (int_poly(3), nonconstant(2)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap()),
        f in (nonconstant(2), int_poly(1)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap()),
        c in 1i64..=4,
    ) {
        prop_assume!(!v.is_constant() && !f.is_constant());
        let exact = OneForm::differential(&v);
        prop_assert_eq!(classify(&pullback_form(&exact, &f).unwrap()).unwrap().name(), "exact");
        let expo = OneForm::dlog(&v).unwrap().scale(&q().from_int(c));
        let pulled = pullback_form(&expo, &f).unwrap();
        prop_assert_eq!(classify(&expo).unwrap().name(), "exponential");
        prop_assert_eq!(classify(&pulled).unwrap().name(), "exponential");
    }

    #[test]
    fn ramification_is_lcm_of_local_exponents(g in (int_poly(4), int_poly(3)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())) {
        let w = OneForm::from_ode(&g).unwrap();
        let e = ramification_exponent(&w).unwrap();
        let d = w.divisor().unwrap();
        let mut has_pole = false;
        for (p, _) in d.iter() {
            let r = local_order(&w, p).unwrap();
            if r < 0 {
                has_pole = true;
                prop_assert_eq!(e % (1 - r) as u64, 0);
            }
        }
        prop_assert_eq!(e == 1, !has_pole);
    }
}

/// Order of `u` at a closed point, counted directly from numerator and
/// denominator multiplicities.
fn ord_of(u: &RationalFunction, p: &ClosedPoint) -> i64 {
    match p {
        ClosedPoint::Infinity => u.den().deg() as i64 - u.num().deg() as i64,
        ClosedPoint::Finite(q) => mult(u.num(), q) - mult(u.den(), q),
    }
}

fn mult(f: &Poly, q: &Poly) -> i64 {
    let mut f = f.clone();
    let mut k = 0;
    while !f.is_zero() && q.divides(&f) {
        f = f.exact_div(q);
        k += 1;
    }
    k
}

#[test]
fn automorphisms_close_under_composition() {
    // dx/(x^5 - x^3) is invariant under x -> -x
    let w = OneForm::new(
        RationalFunction::new(Poly::from_ints(&q(), &[1]), Poly::from_ints(&q(), &[0, 0, 0, -1, 0, 1])).unwrap(),
    );
    let autos = isomorphism_solve(&w, &w).unwrap();
    assert!(autos.len() >= 2);
    let shift = RationalFunction::new(Poly::from_ints(&q(), &[2, 1]), Poly::from_ints(&q(), &[1])).unwrap();
    let w2 = pullback_form(&w, &shift).unwrap();
    let maps = isomorphism_solve(&w2, &w).unwrap();
    for m in &maps {
        for a in &autos {
            assert!(maps.contains(&m.compose(a)) || maps.contains(&a.compose(m)));
        }
    }
}
