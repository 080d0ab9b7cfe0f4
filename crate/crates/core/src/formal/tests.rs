use alloc::vec::Vec;

use super::series::{self, Series};
use super::*;
use crate::field::{rat, NumberField, Rational};

fn q() -> NumberField {
    NumberField::rationals()
}

fn poly(c: &[i64]) -> RationalFunction {
    RationalFunction::from_poly(Poly::from_ints(&q(), c))
}

fn ode(c: &[i64]) -> OneForm {
    OneForm::from_ode(&poly(c)).unwrap()
}

fn at(a: i64) -> Point {
    Point::Finite(q().from_int(a))
}

fn closed(a: i64) -> ClosedPoint {
    ClosedPoint::Finite(Poly::from_ints(&q(), &[-a, 1]))
}

fn frac(p: i64, r: i64) -> AlgebraicNumber {
    q().from_rational(Rational::new(p.into(), r.into()))
}

/// `s' = G(s)` for `s` a series in `tau = z^(1/e)`: compares
/// `e tau^(e-1) num(G)(s)` with `s'(tau) den(G)(s)` through `tau^(N e - 1)`.
fn satisfies(g: &RationalFunction, sol: &PuiseuxSeries) -> bool {
    let e = &sol.embedding;
    let num = g.num().embed(e);
    let den = g.den().embed(e);
    let s = sol.dense();
    let n = s.len() - 1;
    let lhs = series::scale(
        &series::shift(&series::eval_poly(&num, &s), sol.e as usize - 1),
        &sol.field.from_int(sol.e as i64),
    );
    let rhs = series::mul(&series::derivative(&s), &series::eval_poly(&den, &s));
    lhs[..n] == rhs[..n]
}

fn chart_g(w: &OneForm, p: &Point) -> RationalFunction {
    chart_derivation(w, p).unwrap().1
}

#[test]
fn local_orders() {
    let w = ode(&[0, 0, 0, 0, 0, 1]);
    assert_eq!(local_order(&w, &closed(0)).unwrap(), 5);
    assert_eq!(local_order(&w, &ClosedPoint::Infinity).unwrap(), -3);
    assert_eq!(local_order(&ode(&[1]), &closed(7)).unwrap(), 0);
}

#[test]
fn ramification_exponents() {
    assert_eq!(ramification_exponent(&ode(&[0, 0, 0, 0, 0, 1])).unwrap(), 4);
    assert_eq!(ramification_exponent(&ode(&[1])).unwrap(), 1);
    assert_eq!(ramification_exponent(&ode(&[0, 0, -1, 1])).unwrap(), 2);
}

#[test]
fn constant_solution_sets() {
    assert_eq!(constant_solutions(&ode(&[0, 0, -1, 1])).unwrap(), alloc::vec![closed(1), closed(0)]);
    assert_eq!(constant_solutions(&ode(&[0, 0, 0, 0, 0, 1])).unwrap(), alloc::vec![closed(0)]);
    // dx has a double pole at infinity
    assert_eq!(constant_solutions(&ode(&[1])).unwrap(), alloc::vec![ClosedPoint::Infinity]);
}

#[test]
fn normal_form_case_one() {
    // D(x) = 2x + x^2: T = 2t/(2 + t)
    let nf = normal_form(&ode(&[0, 2, 1]), &at(0), 3).unwrap();
    assert_eq!(nf.local.case, Case::I);
    assert_eq!(nf.local.c, Some(q().from_int(2)));
    assert_eq!(nf.parameter, alloc::vec![frac(0, 1), frac(1, 1), frac(-1, 2), frac(1, 4), frac(-1, 8)]);
    assert!(nf.verify());
}

#[test]
fn normal_form_case_three_trivial() {
    let nf = normal_form(&ode(&[0, 0, 1]), &at(0), 4).unwrap();
    assert_eq!(nf.local.case, Case::III);
    assert_eq!(nf.local.c, Some(q().zero()));
    let mut t = series::zeros(&q(), 6);
    t[1] = q().one();
    assert_eq!(nf.parameter, t);
    assert!(nf.verify());
}

#[test]
fn normal_form_case_three_invariant() {
    // D(x) = x^2 + x^3 has c = 1: already in normal form
    let nf = normal_form(&ode(&[0, 0, 1, 1]), &at(0), 6).unwrap();
    assert_eq!(nf.local.c, Some(q().one()));
    assert!(nf.verify());
    let nf = normal_form(&ode(&[0, 0, 0, 2, 1, 5]), &at(0), 6).unwrap();
    assert_eq!(nf.local.r, 3);
    assert!(nf.verify());
}

#[test]
fn normal_form_case_two_at_infinity() {
    let nf = normal_form(&ode(&[0, 0, 0, 0, 0, 1]), &Point::Infinity, 5).unwrap();
    assert_eq!(nf.local.case, Case::II);
    assert_eq!(nf.local.r, -3);
    assert!(nf.verify());
    assert!(nf.verify_power());
}

#[test]
fn normal_form_regular_point() {
    let nf = normal_form(&ode(&[0, 0, -1, 1]), &at(3), 6).unwrap();
    assert_eq!(nf.local.case, Case::II);
    assert_eq!(nf.local.r, 0);
    assert!(nf.verify());
    assert!(nf.verify_power());
}

#[test]
fn quintic_branch_at_infinity() {
    let w = ode(&[0, 0, 0, 0, 0, 1]);
    let sol = formal_solution(&w, &Point::Infinity, 3).unwrap();
    assert_eq!(sol.e, 4);
    assert_eq!(sol.chart, Chart::InverseX);
    // 1/x = (-4z)^(1/4)
    assert_eq!(sol.coeffs.keys().copied().collect::<Vec<_>>(), alloc::vec![1]);
    assert_eq!(sol.coefficient(1).pow(4).unwrap(), sol.field.from_int(-4));
    assert!(satisfies(&chart_g(&w, &Point::Infinity), &sol));
}

#[test]
fn quintic_binomial_oracle() {
    // x' = x^5, x(0) = 1 gives x = (1 - 4z)^(-1/4)
    let sol = formal_solution(&ode(&[0, 0, 0, 0, 0, 1]), &at(1), 8).unwrap();
    let mut binom = Rational::from_integer(1.into());
    let alpha = Rational::new((-1).into(), 4.into());
    for k in 0..=8u64 {
        assert_eq!(sol.coefficient(k), q().from_rational(binom.clone()));
        binom = binom * (&alpha - rat(k as i64)) / rat(k as i64 + 1) * rat(-4);
    }
}

#[test]
fn galois_conjugate_branches() {
    let w = ode(&[0, 0, 0, 0, 0, 1]);
    let g = chart_g(&w, &Point::Infinity);
    let sol = formal_solution(&w, &Point::Infinity, 3).unwrap();
    // zeta = i lies in the coefficient field Q(V0), V0^2 = -2i or 2i
    let v0 = sol.coefficient(1);
    let zeta = &v0.pow(2).unwrap() * &sol.field.from_rational(Rational::new((-1).into(), 2.into()));
    let zeta = if (&zeta * &zeta) == sol.field.from_int(-1) { zeta } else { -&zeta };
    assert_eq!(&zeta * &zeta, sol.field.from_int(-1));
    for j in 0..4 {
        let mut twisted = sol.clone();
        for (k, c) in twisted.coeffs.iter_mut() {
            *c = &*c * &zeta.pow((j * k) as i64).unwrap();
        }
        assert!(satisfies(&g, &twisted));
    }
}

#[test]
fn regular_solutions() {
    let sol = formal_solution(&ode(&[1]), &at(5), 4).unwrap();
    assert_eq!(sol.dense(), alloc::vec![q().from_int(5), q().one(), q().zero(), q().zero(), q().zero()]);
    // x' = x^3 - x^2 at x = 3: 3 + 18z + 189z^2
    let sol = formal_solution(&ode(&[0, 0, -1, 1]), &at(3), 2).unwrap();
    assert_eq!(sol.dense(), alloc::vec![q().from_int(3), q().from_int(18), q().from_int(189)]);
}

#[test]
fn constant_solution_at_zero_of_derivation() {
    let sol = formal_solution(&ode(&[0, 0, -1, 1]), &at(1), 5).unwrap();
    assert!(sol.is_constant());
    assert_eq!(sol.coefficient(0), q().one());
}

#[test]
fn oracle_examples() {
    let s = series_oracle(&poly(&[1]), &q().from_int(5), 3).unwrap();
    assert_eq!(s.dense(), alloc::vec![q().from_int(5), q().one(), q().zero(), q().zero()]);
    let s = series_oracle(&poly(&[0, 0, -1, 1]), &q().from_int(2), 2).unwrap();
    assert_eq!(s.dense(), alloc::vec![q().from_int(2), q().from_int(4), q().from_int(16)]);
    let s = series_oracle(&poly(&[0, 0, 1]), &q().one(), 6).unwrap();
    assert!(s.dense().iter().all(AlgebraicNumber::is_one));
    let pole = RationalFunction::new(Poly::from_ints(&q(), &[1]), Poly::from_ints(&q(), &[0, 1])).unwrap();
    assert_eq!(series_oracle(&pole, &q().zero(), 3), Err(Error::PoleAtInitialValue));
}

#[test]
fn oracle_agrees_with_ansatz() {
    for g in [&[0, 0, -1, 1][..], &[-1, 0, 0, 1], &[0, 0, 1], &[0, 3], &[1]] {
        let w = ode(g);
        for u0 in [-3, 2, 5, 7, -1, 4] {
            if w.dual_derivation().unwrap().eval(&q().from_int(u0)).unwrap().is_zero() {
                continue;
            }
            let a = formal_solution(&w, &at(u0), 12).unwrap();
            let b = series_oracle(&poly(g), &q().from_int(u0), 12).unwrap();
            assert_eq!(a.dense(), b.dense(), "g = {g:?}, u0 = {u0}");
        }
    }
}

#[test]
fn ramified_substitution_at_zeros_of_form() {
    // dx/(x^3 - x^2) at infinity has r = -1; 3x^2 dx at 0 has r = -2
    let w = ode(&[0, 0, -1, 1]);
    let sol = formal_solution(&w, &Point::Infinity, 4).unwrap();
    assert_eq!(sol.e, 2);
    assert!(satisfies(&chart_g(&w, &Point::Infinity), &sol));
    let g = RationalFunction::new(Poly::from_ints(&q(), &[1]), Poly::from_ints(&q(), &[0, 0, 3])).unwrap();
    let w = OneForm::from_ode(&g).unwrap();
    let sol = formal_solution(&w, &at(0), 4).unwrap();
    assert_eq!(sol.e, 3);
    assert!(satisfies(&g, &sol));
    let s: Series = sol.dense();
    assert!(s[0].is_zero());
}
