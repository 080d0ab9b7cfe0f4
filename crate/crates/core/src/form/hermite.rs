use super::OneForm;
use crate::poly::{Poly, RationalFunction};

/// Hermite reduction of `w dx` (Mack's linear variant).
pub(super) fn reduce(form: &OneForm) -> (RationalFunction, OneForm) {
    let field = form.field();
    if form.is_zero() {
        return (RationalFunction::zero(field), form.clone());
    }
    let (poly, mut a) = form.w().polynomial_part();
    let d = form.w().den().clone();
    let mut v = RationalFunction::from_poly(poly.integral());

    let mut dm = d.gcd(&d.derivative());
    let ds = d.exact_div(&dm);
    while !dm.is_constant() {
        let dm2 = dm.gcd(&dm.derivative());
        let dms = dm.exact_div(&dm2);
        let coeff = -&(&ds * &dm.derivative()).exact_div(&dm);
        let (b, c) = Poly::solve_bezout(&coeff, &dms, &a);
        a = &c - &(&b.derivative() * &ds).exact_div(&dms);
        v = &v + &RationalFunction::new(b, dm.clone()).expect("nonzero denominator");
        dm = dm2;
    }
    let rest = RationalFunction::new(a, ds).expect("nonzero denominator");
    let (extra, proper) = rest.polynomial_part();
    if !extra.is_zero() {
        v = &v + &RationalFunction::from_poly(extra.integral());
    }
    let log = RationalFunction::new(proper, rest.den().clone()).expect("nonzero denominator");
    (v, OneForm::new(log))
}
