use autoform_core::poly::factor_rational;
use autoform_core::{NumberField, Rational};

use crate::error::CliError;
use crate::parse::{parse_constant, parse_function, Scope};
use crate::render::Names;

/// The session field `Q(a)` with its generator name and declared symbols.
#[derive(Clone, Debug)]
pub struct Session {
    pub scope: Scope,
    pub names: Names,
}

impl Session {
    /// `alg` is a polynomial in one name, e.g. `a^2-2`; each entry of `syms`
    /// reads `name=expr` with `expr` a constant of the session field.
    pub fn new(alg: Option<&str>, syms: &[String]) -> Result<Self, CliError> {
        let mut session = match alg {
            None => Session { scope: Scope::rationals(), names: Names::rationals() },
            Some(text) => Self::with_field(text)?,
        };
        for entry in syms {
            let (name, expr) = entry
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--sym expects name=expr, got '{entry}'")))?;
            let name = name.trim();
            if !is_identifier(name) || ["x", "u", "d", "dx"].contains(&name) {
                return Err(CliError::Usage(format!("'{name}' cannot be declared as a symbol")));
            }
            let value = parse_constant(expr, &session.scope)?;
            session.scope.constants.insert(name.to_string(), value);
        }
        Ok(session)
    }

    fn with_field(text: &str) -> Result<Self, CliError> {
        let name = generator_name(text)?;
        let mut scope = Scope::rationals();
        scope.variables = vec![name.clone()];
        let m = parse_function(text, &scope)?;
        if !m.is_polynomial() || m.num().deg() == 0 {
            return Err(CliError::Usage("--alg must be a nonconstant polynomial".into()));
        }
        let coeffs: Vec<Rational> = m.num().coeffs().iter().map(|c| c.to_rational().expect("rational")).collect();
        if !coeffs.last().is_some_and(|c| *c == Rational::from_integer(1.into())) {
            return Err(CliError::Usage("--alg must be monic".into()));
        }
        let factors = factor_rational(&coeffs);
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(CliError::Core(autoform_core::Error::Reducible));
        }
        let (field, value) = if coeffs.len() == 2 {
            let q = NumberField::rationals();
            let root = q.from_rational(-coeffs[0].clone());
            (q, root)
        } else {
            let f = NumberField::new(coeffs)?;
            let g = f.generator();
            (f, g)
        };
        let mut scope = Scope::new(field.clone());
        scope.constants.insert(name.clone(), value);
        Ok(Session { scope, names: Names { field, generator: name } })
    }

    pub fn field(&self) -> &NumberField {
        &self.scope.field
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// The single name occurring in the defining polynomial.
fn generator_name(text: &str) -> Result<String, CliError> {
    let mut names: Vec<String> = Vec::new();
    let mut current = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_alphanumeric() || c == '_' {
            if current.is_empty() && c.is_ascii_digit() {
                continue;
            }
            current.push(c);
        } else if !current.is_empty() {
            if !names.contains(&current) {
                names.push(std::mem::take(&mut current));
            } else {
                current.clear();
            }
        }
    }
    match names.as_slice() {
        [name] if !["x", "u", "d", "dx"].contains(&name.as_str()) => Ok(name.clone()),
        [name] => Err(CliError::Usage(format!("'{name}' is reserved and cannot name the generator"))),
        _ => Err(CliError::Usage("--alg must be a polynomial in exactly one name".into())),
    }
}
