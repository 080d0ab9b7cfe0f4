//! Expressions, 1-forms and autonomous ODEs over a session field.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | <implicit> differential)*
//! unary  := ('+' | '-') unary | factor
//! factor := base ('^' ['-'] int)?
//! base   := int | name | 'dx' | 'd' '(' expr ')' | '(' expr ')'
//! ode    := name "'" '=' expr
//! ```
//!
//! Multiplication is implicit only in front of `dx` and `d(`.

use std::collections::BTreeMap;

use autoform_core::{AlgebraicNumber, Error, NumberField, OneForm, Rational, RationalFunction};

use crate::error::CliError;

/// Names available to the parser: the variable spellings and constants.
#[derive(Clone, Debug)]
pub struct Scope {
    pub field: NumberField,
    pub variables: Vec<String>,
    pub constants: BTreeMap<String, AlgebraicNumber>,
}

impl Scope {
    pub fn rationals() -> Self {
        Scope::new(NumberField::rationals())
    }

    /// `x` and `u` both denote the variable.
    pub fn new(field: NumberField) -> Self {
        Scope { field, variables: vec!["x".into(), "u".into()], constants: BTreeMap::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    Decimal(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Prime,
    Equals,
}

fn lex(input: &str) -> Result<Vec<(usize, Token)>, CliError> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let mut decimal = false;
            if i < chars.len() && chars[i].1 == '.' {
                decimal = true;
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, if decimal { Token::Decimal(text) } else { Token::Int(text) }));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Token::Name(chars[start..i].iter().map(|&(_, c)| c).collect())));
            continue;
        }
        let token = match c {
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '\'' | '\u{2032}' => Token::Prime,
            '=' => Token::Equals,
            _ => return Err(CliError::syntax(pos, format!("unexpected character '{c}'"))),
        };
        out.push((pos, token));
        i += 1;
    }
    Ok(out)
}

/// A parsed value: a function, or a 1-form `f dx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Function(RationalFunction),
    Form(RationalFunction),
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
    scope: &'a Scope,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), CliError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(CliError::syntax(pos, format!("expected {what}"))),
        }
    }

    fn starts_differential(&self) -> bool {
        match self.peek() {
            Some(Token::Name(n)) if n == "dx" => true,
            Some(Token::Name(n)) if n == "d" => matches!(self.tokens.get(self.at + 1), Some((_, Token::LParen))),
            _ => false,
        }
    }

    fn expr(&mut self) -> Result<Value, CliError> {
        let mut acc = self.term()?;
        loop {
            let pos = self.pos();
            let sub = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.term()?;
            acc = combine(acc, rhs, pos, if sub { Op::Sub } else { Op::Add })?;
        }
    }

    fn term(&mut self) -> Result<Value, CliError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            let op = match self.peek() {
                Some(Token::Star) => Op::Mul,
                Some(Token::Slash) => Op::Div,
                _ if self.starts_differential() => {
                    let rhs = self.factor()?;
                    acc = combine(acc, rhs, pos, Op::Mul)?;
                    continue;
                }
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.unary()?;
            acc = combine(acc, rhs, pos, op)?;
        }
    }

    fn unary(&mut self) -> Result<Value, CliError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(match self.unary()? {
                    Value::Function(f) => Value::Function(-&f),
                    Value::Form(f) => Value::Form(-&f),
                })
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<Value, CliError> {
        let base_pos = self.pos();
        let base = self.base()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let negative = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                true
            }
            Some(Token::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let k: i64 = match self.bump() {
            Some(Token::Int(s)) => s.parse().map_err(|_| CliError::syntax(pos, "exponent too large".into()))?,
            Some(_) => return Err(CliError::NonIntegerExponent { position: pos }),
            None => return Err(CliError::syntax(pos, "expected an exponent".into())),
        };
        let k = if negative { -k } else { k };
        match base {
            Value::Function(f) => Ok(Value::Function(f.pow(k).map_err(CliError::Core)?)),
            Value::Form(_) => Err(CliError::syntax(base_pos, "a 1-form cannot be raised to a power".into())),
        }
    }

    fn base(&mut self) -> Result<Value, CliError> {
        let pos = self.pos();
        let field = &self.scope.field;
        match self.bump() {
            Some(Token::Int(s)) => {
                let n: Rational = s.parse().map_err(|_| CliError::syntax(pos, "bad integer".into()))?;
                Ok(Value::Function(RationalFunction::constant(field.from_rational(n))))
            }
            Some(Token::Decimal(_)) => {
                Err(CliError::syntax(pos, "decimal literals are not exact; write p/q".into()))
            }
            Some(Token::LParen) => {
                let v = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(v)
            }
            Some(Token::Name(n)) if n == "dx" => Ok(Value::Form(RationalFunction::one(field))),
            Some(Token::Name(n)) if n == "d" && self.peek() == Some(&Token::LParen) => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                match inner {
                    Value::Function(f) => Ok(Value::Form(f.derivative())),
                    Value::Form(_) => Err(CliError::syntax(pos, "d(...) of a 1-form".into())),
                }
            }
            Some(Token::Name(n)) => {
                if self.scope.variables.contains(&n) {
                    Ok(Value::Function(RationalFunction::x(field)))
                } else if let Some(c) = self.scope.constants.get(&n) {
                    Ok(Value::Function(RationalFunction::constant(c.clone())))
                } else {
                    Err(CliError::UndeclaredSymbol { name: n, position: pos })
                }
            }
            Some(_) => Err(CliError::syntax(pos, "unexpected token".into())),
            None => Err(CliError::syntax(pos, "unexpected end of input".into())),
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

fn combine(a: Value, b: Value, pos: usize, op: Op) -> Result<Value, CliError> {
    use Value::{Form, Function as Fun};
    let core = |e: Error| CliError::Core(e);
    Ok(match (op, a, b) {
        (Op::Add, Fun(f), Fun(g)) => Fun(&f + &g),
        (Op::Add, Form(f), Form(g)) => Form(&f + &g),
        (Op::Sub, Fun(f), Fun(g)) => Fun(&f - &g),
        (Op::Sub, Form(f), Form(g)) => Form(&f - &g),
        (Op::Add | Op::Sub, _, _) => {
            return Err(CliError::syntax(pos, "cannot add a function and a 1-form".into()));
        }
        (Op::Mul, Fun(f), Fun(g)) => Fun(&f * &g),
        (Op::Mul, Fun(f), Form(g)) | (Op::Mul, Form(g), Fun(f)) => Form(&f * &g),
        (Op::Mul, Form(_), Form(_)) => return Err(CliError::syntax(pos, "product of two 1-forms".into())),
        (Op::Div, Fun(f), Fun(g)) => Fun(f.checked_div(&g).map_err(core)?),
        (Op::Div, Form(f), Fun(g)) => Form(f.checked_div(&g).map_err(core)?),
        (Op::Div, _, Form(_)) => return Err(CliError::syntax(pos, "division by a 1-form".into())),
    })
}

fn parse_value(input: &str, scope: &Scope) -> Result<Value, CliError> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, at: 0, end: input.len(), scope };
    let v = p.expr()?;
    if p.at < p.tokens.len() {
        return Err(CliError::syntax(p.pos(), "unexpected trailing input".into()));
    }
    Ok(v)
}

/// Parses a rational function.
pub fn parse_function(input: &str, scope: &Scope) -> Result<RationalFunction, CliError> {
    match parse_value(input, scope)? {
        Value::Function(f) => Ok(f),
        Value::Form(_) => Err(CliError::syntax(0, "expected a function, found a 1-form".into())),
    }
}

/// Parses a 1-form such as `(1/x) dx` or `dx/x + 2 d(x^3)`.
pub fn parse_form(input: &str, scope: &Scope) -> Result<OneForm, CliError> {
    match parse_value(input, scope)? {
        Value::Form(f) => Ok(OneForm::new(f)),
        Value::Function(_) => Err(CliError::syntax(input.len(), "expected a 1-form (missing dx or d(...))".into())),
    }
}

/// Parses `u' = g(u)` into the right-hand side `g`.
pub fn parse_ode_rhs(input: &str, scope: &Scope) -> Result<RationalFunction, CliError> {
    let tokens = lex(input)?;
    match tokens.as_slice() {
        [(_, Token::Name(n)), (_, Token::Prime), (_, Token::Equals), ..] if scope.variables.contains(n) => {}
        _ => return Err(CliError::syntax(0, "expected \"u' = ...\"".into())),
    }
    let end = input.len();
    let mut p = Parser { tokens, at: 3, end, scope };
    let v = p.expr()?;
    if p.at < p.tokens.len() {
        return Err(CliError::syntax(p.pos(), "unexpected trailing input".into()));
    }
    match v {
        Value::Function(g) => Ok(g),
        Value::Form(_) => Err(CliError::syntax(0, "right-hand side must be a function".into())),
    }
}

/// Parses an ODE into its 1-form `dx/g`.
pub fn parse_ode(input: &str, scope: &Scope) -> Result<OneForm, CliError> {
    let g = parse_ode_rhs(input, scope)?;
    if g.is_zero() {
        return Err(CliError::Core(Error::ZeroForm));
    }
    OneForm::from_ode(&g).map_err(CliError::Core)
}

/// Parses a constant (an expression without the variable).
pub fn parse_constant(input: &str, scope: &Scope) -> Result<AlgebraicNumber, CliError> {
    let f = parse_function(input, scope)?;
    f.as_constant().ok_or_else(|| CliError::syntax(0, "expected a constant".into()))
}
