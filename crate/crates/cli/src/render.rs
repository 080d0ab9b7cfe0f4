//! Canonical text for numbers, polynomials, functions, forms and series.
//! Everything printed here parses back to the same value.

use autoform_core::formal::{Chart, PuiseuxSeries};
use autoform_core::{AlgebraicNumber, ClosedPoint, Divisor, NumberField, OneForm, Poly, Rational, RationalFunction};
use serde_json::{json, Value};

/// Generator names: the session generator for the session field, `w` for
/// fields built during a computation.
#[derive(Clone, Debug)]
pub struct Names {
    pub field: NumberField,
    pub generator: String,
}

impl Names {
    pub fn rationals() -> Self {
        Names { field: NumberField::rationals(), generator: "a".into() }
    }

    pub fn generator_of(&self, f: &NumberField) -> &str {
        if *f == self.field {
            &self.generator
        } else {
            "w"
        }
    }

    pub fn number(&self, c: &AlgebraicNumber) -> String {
        match c.to_rational() {
            Some(r) => r.to_string(),
            None => rational_poly(c.coords(), self.generator_of(c.field())),
        }
    }

    /// The defining polynomial of a field in its generator name.
    pub fn field(&self, f: &NumberField) -> String {
        if f.is_rationals() {
            return "Q".into();
        }
        rational_poly(f.modulus(), self.generator_of(f))
    }

    pub fn poly(&self, p: &Poly, var: &str) -> String {
        join_terms(self.terms(p).rev(), var)
    }

    /// Polynomial in increasing degree, as a truncated series is read.
    pub fn ascending(&self, p: &Poly, var: &str) -> String {
        join_terms(self.terms(p), var)
    }

    fn terms<'a>(&'a self, p: &'a Poly) -> impl DoubleEndedIterator<Item = Term> + 'a {
        p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| self.term(c, k))
    }

    fn term(&self, c: &AlgebraicNumber, k: usize) -> Term {
        let text = self.number(c);
        match text.strip_prefix('-') {
            Some(m) if !has_binary_sum(m) => Term { neg: true, coeff: m.to_string(), k },
            _ if has_binary_sum(&text) => Term { neg: false, coeff: format!("({text})"), k },
            _ => Term { neg: false, coeff: text, k },
        }
    }

    pub fn function(&self, f: &RationalFunction) -> String {
        let num = self.poly(f.num(), "x");
        if f.den().is_one() {
            return num;
        }
        let den = self.poly(f.den(), "x");
        let num = if has_binary_sum(&num) { format!("({num})") } else { num };
        let den = if den.contains([' ', '*', '/']) { format!("({den})") } else { den };
        format!("{num}/{den}")
    }

    pub fn form(&self, w: &OneForm) -> String {
        let f = w.w();
        let num = self.poly(f.num(), "x");
        let head = match num.as_str() {
            "1" => "dx".to_string(),
            "-1" => "-dx".to_string(),
            _ if has_binary_sum(&num) => format!("({num}) dx"),
            _ => format!("{num} dx"),
        };
        if f.den().is_one() {
            return head;
        }
        let den = self.poly(f.den(), "x");
        if den.contains([' ', '*', '/']) {
            format!("{head}/({den})")
        } else {
            format!("{head}/{den}")
        }
    }

    pub fn point(&self, p: &ClosedPoint) -> String {
        match p {
            ClosedPoint::Infinity => "inf".into(),
            ClosedPoint::Finite(q) => self.poly(q, "x"),
        }
    }

    pub fn divisor(&self, d: &Divisor) -> String {
        let mut out = String::new();
        for (p, m) in d.iter() {
            let sign = if m < 0 { "-" } else { "+" };
            let k = m.unsigned_abs();
            let body = if k == 1 { format!("[{}]", self.point(p)) } else { format!("{k}*[{}]", self.point(p)) };
            if out.is_empty() {
                out = if m < 0 { format!("-{body}") } else { body };
            } else {
                out.push_str(&format!(" {sign} {body}"));
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    pub fn series(&self, s: &PuiseuxSeries) -> String {
        let lhs = match s.chart {
            Chart::X => "x(z)",
            Chart::InverseX => "1/x(z)",
        };
        let terms: Vec<Term> = s.coeffs.iter().map(|(&k, c)| self.term(c, k as usize)).collect();
        let body = join_with(terms, |k| exponent_text(k as u64, s.e));
        if s.is_constant() {
            return format!("{lhs} = {body}");
        }
        format!("{lhs} = {body} + O({})", exponent_text(s.order * s.e + 1, s.e))
    }

    pub fn number_json(&self, c: &AlgebraicNumber) -> Value {
        if c.field().is_rationals() {
            return json!(self.number(c));
        }
        json!({
            "field": self.field(c.field()),
            "coords": c.coords().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn divisor_json(&self, d: &Divisor) -> Value {
        Value::Array(d.iter().map(|(p, m)| json!({ "point": self.point(p), "mult": m })).collect())
    }

    /// Field record: the defining polynomial, and where it differs from the
    /// session field, the image of the session generator.
    pub fn field_json(&self, f: &NumberField) -> Value {
        json!({ "generator": self.generator_of(f), "polynomial": self.field(f) })
    }
}

fn exponent_text(k: u64, e: u64) -> String {
    let g = gcd(k, e);
    let (p, q) = (k / g, e / g);
    match (p, q) {
        (0, _) => String::new(),
        (1, 1) => "z".into(),
        (p, 1) => format!("z^{p}"),
        (p, q) => format!("z^({p}/{q})"),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Whether the text has a top-level `+` or `-` between terms.
fn has_binary_sum(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ")
}

struct Term {
    neg: bool,
    /// Magnitude of the coefficient, parenthesized when it is a sum.
    coeff: String,
    k: usize,
}

fn rational_poly(coeffs: &[Rational], var: &str) -> String {
    let zero = Rational::from_integer(0.into());
    let terms = coeffs.iter().enumerate().rev().filter(|(_, c)| **c != zero).map(|(k, c)| Term {
        neg: *c < zero,
        coeff: if *c < zero { (-c).to_string() } else { c.to_string() },
        k,
    });
    join_terms(terms, var)
}

fn join_terms(terms: impl Iterator<Item = Term>, var: &str) -> String {
    join_with(terms, |k| match k {
        0 => String::new(),
        1 => var.to_string(),
        k => format!("{var}^{k}"),
    })
}

fn join_with(terms: impl IntoIterator<Item = Term>, monomial: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for t in terms {
        let m = monomial(t.k);
        let term = match (m.is_empty(), t.coeff.as_str()) {
            (true, c) => c.to_string(),
            (false, "1") => m,
            (false, c) => format!("{c}*{m}"),
        };
        if out.is_empty() {
            out = if t.neg { format!("-{term}") } else { term };
        } else {
            out.push_str(if t.neg { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
