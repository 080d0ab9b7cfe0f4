use autoform::parse::{parse_form, parse_function, parse_ode, Scope};
use autoform::render::Names;
use autoform::session::Session;
use autoform::CliError;
use autoform_core::{NumberField, OneForm, Poly, Rational, RationalFunction};
use proptest::prelude::*;

fn q() -> NumberField {
    NumberField::rationals()
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(Poly::from_ints(&q(), num), Poly::from_ints(&q(), den)).unwrap()
}

fn sqrt2_session() -> Session {
    Session::new(Some("a^2-2"), &["sqrt2=a".to_string()]).unwrap()
}

#[test]
fn ode_becomes_form() {
    let w = parse_ode("u' = u^3 - u^2", &Scope::rationals()).unwrap();
    assert_eq!(w, OneForm::new(rf(&[1], &[0, 0, -1, 1])));
}

#[test]
fn coefficient_times_dx() {
    assert_eq!(parse_form("(1/x) dx", &Scope::rationals()).unwrap(), OneForm::new(rf(&[1], &[0, 1])));
    assert_eq!(parse_form("dx/x", &Scope::rationals()).unwrap(), OneForm::new(rf(&[1], &[0, 1])));
    let w = parse_form("2 dx + d(x^2)", &Scope::rationals()).unwrap();
    assert_eq!(w, OneForm::new(rf(&[2, 2], &[1])));
}

#[test]
fn sqrt2_coefficient_function() {
    let s = sqrt2_session();
    let f = parse_function("1/x + sqrt2 * (6*x^5)/(x^6-1)", &s.scope).unwrap();
    let k = s.field().clone();
    let x = RationalFunction::x(&k);
    let x6 = x.pow(6).unwrap();
    let rhs = &x.inverse().unwrap()
        + &(&RationalFunction::constant(k.generator()) * &(&x6.derivative() / &(&x6 - &RationalFunction::one(&k))));
    assert_eq!(f, rhs);
}

#[test]
fn parse_errors_carry_positions() {
    let scope = Scope::rationals();
    assert!(matches!(parse_function("x^(1/2)", &scope), Err(CliError::NonIntegerExponent { position: 2 })));
    assert!(matches!(parse_function("x + y", &scope), Err(CliError::UndeclaredSymbol { position: 4, .. })));
    assert!(matches!(parse_function("x +", &scope), Err(CliError::Syntax { position: 3, .. })));
    assert!(matches!(parse_function("2x", &scope), Err(CliError::Syntax { position: 1, .. })));
    assert!(matches!(parse_function("1.5*x", &scope), Err(CliError::Syntax { position: 0, .. })));
    assert!(matches!(parse_form("x + dx", &scope), Err(CliError::Syntax { .. })));
}

#[test]
fn session_rejects_reducible_fields() {
    assert!(matches!(Session::new(Some("a^2-1"), &[]), Err(CliError::Core(autoform_core::Error::Reducible))));
    assert!(Session::new(Some("t^3-t-1"), &[]).is_ok());
}

#[test]
fn printed_examples() {
    let names = Names::rationals();
    assert_eq!(names.form(&OneForm::new(rf(&[1], &[0, 0, -1, 1]))), "dx/(x^3 - x^2)");
    assert_eq!(names.function(&rf(&[-1, 1], &[0, 1])), "(x - 1)/x");
    assert_eq!(names.form(&OneForm::new(rf(&[1, 0, 3], &[0, 2]))), "(3/2*x^2 + 1/2) dx/x");
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn poly_over(field: NumberField, max_deg: usize) -> impl Strategy<Value = Poly> {
    let d = field.degree();
    prop::collection::vec(prop::collection::vec(coeff(), d), 1..=max_deg + 1).prop_map(move |cs| {
        let coeffs = cs.iter().map(|c| field.element(c)).collect();
        Poly::from_coeffs(&field, coeffs)
    })
}

fn function_over(field: NumberField) -> impl Strategy<Value = RationalFunction> {
    (poly_over(field.clone(), 4), poly_over(field, 3))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn rational_functions_round_trip(f in function_over(q())) {
        let names = Names::rationals();
        let text = names.function(&f);
        prop_assert_eq!(parse_function(&text, &Scope::rationals()).unwrap(), f, "{}", text);
    }

    #[test]
    fn forms_round_trip(f in function_over(q())) {
        let names = Names::rationals();
        let w = OneForm::new(f);
        let text = names.form(&w);
        prop_assert_eq!(parse_form(&text, &Scope::rationals()).unwrap(), w, "{}", text);
    }

    #[test]
    fn extension_functions_round_trip(f in function_over(sqrt2_session().field().clone())) {
        let s = sqrt2_session();
        let text = s.names.function(&f);
        prop_assert_eq!(parse_function(&text, &s.scope).unwrap(), f.clone(), "{}", text);
        let w = OneForm::new(f);
        let text = s.names.form(&w);
        prop_assert_eq!(parse_form(&text, &s.scope).unwrap(), w, "{}", text);
    }

    #[test]
    fn cubic_field_round_trip(f in function_over(Session::new(Some("t^3-t-1"), &[]).unwrap().field().clone())) {
        let s = Session::new(Some("t^3-t-1"), &[]).unwrap();
        let text = s.names.function(&f);
        prop_assert_eq!(parse_function(&text, &s.scope).unwrap(), f, "{}", text);
    }
}
