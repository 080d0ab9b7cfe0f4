use super::*;
use crate::field::{rat, Rational};

fn q() -> NumberField {
    NumberField::rationals()
}

fn p(c: &[i64]) -> Poly {
    Poly::from_ints(&q(), c)
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(p(num), p(den)).unwrap()
}

fn form(num: &[i64], den: &[i64]) -> OneForm {
    OneForm::new(rf(num, den))
}

fn fin(c: &[i64]) -> ClosedPoint {
    ClosedPoint::Finite(p(c))
}

fn rosenlicht() -> OneForm {
    form(&[1], &[0, 0, -1, 1])
}

/// dx/x + sqrt2 d(x^6-1)/(x^6-1) + d(x^3 + x^-6) over Q(sqrt2).
fn sqrt2_example() -> OneForm {
    let k = NumberField::new(alloc::vec![rat(-2), rat(0), rat(1)]).unwrap();
    let x = RationalFunction::x(&k);
    let u2 = &x.pow(6).unwrap() - &RationalFunction::one(&k);
    let v = &x.pow(3).unwrap() + &x.pow(-6).unwrap();
    OneForm::dlog(&x)
        .unwrap()
        .checked_add(&OneForm::dlog(&u2).unwrap().scale(&k.generator()))
        .unwrap()
        .checked_add(&OneForm::differential(&v))
        .unwrap()
}

#[test]
fn divisors() {
    assert_eq!(form(&[1], &[1]).divisor().unwrap(), Divisor::from_pairs([(ClosedPoint::Infinity, -2)]));
    assert_eq!(
        rosenlicht().divisor().unwrap(),
        Divisor::from_pairs([(fin(&[0, 1]), -2), (fin(&[-1, 1]), -1), (ClosedPoint::Infinity, 1)])
    );
    assert_eq!(
        form(&[1], &[0, 1]).divisor().unwrap(),
        Divisor::from_pairs([(fin(&[0, 1]), -1), (ClosedPoint::Infinity, -1)])
    );
    assert_eq!(OneForm::zero(&q()).divisor(), Err(Error::ZeroForm));
}

#[test]
fn divisor_degree_is_minus_two() {
    for w in [rosenlicht(), form(&[1, 0, 1], &[-2, 0, 0, 1]), form(&[0, 0, 0, 5], &[1, 1]), sqrt2_example()] {
        assert_eq!(w.divisor().unwrap().degree(), -2);
    }
}

#[test]
fn rosenlicht_residues() {
    let w = rosenlicht();
    let at = |pt: ClosedPoint| w.residue(&pt).unwrap().value().unwrap();
    assert_eq!(at(fin(&[0, 1])), q().from_int(-1));
    assert_eq!(at(fin(&[-1, 1])), q().from_int(1));
    assert_eq!(at(ClosedPoint::Infinity), q().zero());
    assert_eq!(form(&[1], &[0, 1]).residue(&fin(&[0, 1])).unwrap().value().unwrap(), q().one());
    assert!(form(&[1], &[1]).residue(&fin(&[-3, 1])).unwrap().is_zero());
}

#[test]
fn residue_at_quadratic_point() {
    // dx/(x^2-2): residue 1/(2x) = x/4 in Q[x]/(x^2-2), conjugates cancel
    let w = form(&[1], &[-2, 0, 1]);
    let r = w.residue(&fin(&[-2, 0, 1])).unwrap();
    assert_eq!(r.class, Poly::from_rationals(&q(), &[rat(0), Rational::new(1.into(), 4.into())]));
    assert!(r.trace().is_zero());
    let (adj, value) = r.at_root().unwrap();
    assert_eq!(&value * &value, adj.field.from_rational(Rational::new(1.into(), 8.into())));
}

#[test]
fn residues_sum_to_zero() {
    for w in [rosenlicht(), form(&[3, 0, 1], &[-2, 0, 0, 1]), form(&[1, 2, 0, 7], &[0, 0, 1, 0, 1]), sqrt2_example()] {
        let total = w.residues().unwrap().iter().fold(w.field().zero(), |acc, r| &acc + &r.trace());
        assert!(total.is_zero(), "{w}");
    }
}

#[test]
fn hermite_examples() {
    let (v, log) = form(&[1], &[0, 0, 1]).hermite_reduce();
    assert_eq!(v, rf(&[-1], &[0, 1]));
    assert!(log.is_zero());

    let (v, log) = rosenlicht().hermite_reduce();
    assert_eq!(v, rf(&[1], &[0, 1]));
    assert_eq!(log, OneForm::new(&rf(&[1], &[-1, 1]) - &rf(&[1], &[0, 1])));

    let (v, log) = form(&[1], &[1]).hermite_reduce();
    assert_eq!(v, rf(&[0, 1], &[1]));
    assert!(log.is_zero());
}

#[test]
fn hermite_reconstructs_high_order_poles() {
    let w = form(&[1, 2, 3, 0, 0, 0, 0, 1], &[0, 0, 0, 1, 3, 3, 1]);
    let (v, log) = w.hermite_reduce();
    assert_eq!(OneForm::differential(&v).checked_add(&log).unwrap(), w);
    assert!(log.w().den().squarefree().iter().all(|(_, m)| *m == 1));
    assert!(v.num().coeff(0).is_zero() || !v.is_polynomial());
}

#[test]
fn rosenlicht_decomposition() {
    let d = rosenlicht().log_decompose().unwrap();
    assert!(d.reconstructs(&rosenlicht()));
    assert_eq!(d.v, rf(&[1], &[0, 1]));
    assert_eq!(d.basis, alloc::vec![q().one()]);
    assert_eq!(d.terms.len(), 1);
    assert_eq!(d.terms[0].u, rf(&[-1, 1], &[0, 1]));
    assert_eq!(d.terms[0].divisor, Divisor::from_pairs([(fin(&[-1, 1]), 1), (fin(&[0, 1]), -1)]));
}

#[test]
fn sqrt2_decomposition() {
    let w = sqrt2_example();
    let d = w.log_decompose().unwrap();
    let k = w.field().clone();
    assert!(d.reconstructs(&w));
    assert!(d.embedding.is_identity());
    assert_eq!(d.rank(), 2);
    let x = RationalFunction::x(&k);
    assert_eq!(d.v, &x.pow(3).unwrap() + &x.pow(-6).unwrap());
    for t in &d.terms {
        assert_eq!(t.divisor.degree(), 0);
        assert!(OneForm::dlog(&t.u).unwrap().divisor().is_ok());
    }
}

#[test]
fn exact_form_has_no_log_terms() {
    let d = form(&[0, 2], &[1]).log_decompose().unwrap();
    assert_eq!(d.v, rf(&[0, 0, 1], &[1]));
    assert_eq!(d.rank(), 0);
    assert_eq!(d.reconstruct(), form(&[0, 2], &[1]));
}

#[test]
fn irrational_residues_need_extension() {
    // 4 dx/(x^2-2): residues +-sqrt2
    let w = form(&[4], &[-2, 0, 1]);
    let d = w.log_decompose().unwrap();
    assert_eq!(d.field.degree(), 2);
    assert_eq!(d.rank(), 1);
    assert!(d.reconstructs(&w));
}

#[test]
fn pullbacks() {
    let dy_y = form(&[1], &[0, 1]);
    assert_eq!(dy_y.pullback(&rf(&[0, 0, 1], &[1])).unwrap(), form(&[2], &[0, 1]));
    let f = rf(&[1, 0, 3], &[2, 1]);
    assert_eq!(form(&[1], &[1]).pullback(&f).unwrap(), OneForm::differential(&f));
    assert_eq!(dy_y.pullback(&rf(&[4], &[1])), Err(Error::ConstantMap));
}

#[test]
fn sqrt2_example_is_a_cubic_pullback() {
    let w = sqrt2_example();
    let k = w.field().clone();
    let y = RationalFunction::x(&k);
    let eta = OneForm::dlog(&y)
        .unwrap()
        .scale(&k.from_rational(Rational::new(1.into(), 3.into())))
        .checked_add(&OneForm::dlog(&(&y.pow(2).unwrap() - &RationalFunction::one(&k))).unwrap().scale(&k.generator()))
        .unwrap()
        .checked_add(&OneForm::differential(&(&y + &y.pow(-2).unwrap())))
        .unwrap();
    assert_eq!(eta.pullback(&y.pow(3).unwrap()).unwrap(), w);
}
