//! Formal solutions of `u' = g(u)`: local orders of the dual derivation,
//! local normal forms and Puiseux series solutions.

mod normal;
mod series;
mod solution;

use alloc::vec::Vec;
use core::fmt;

pub use normal::{normal_form, NormalForm};
pub use solution::{formal_solution, series_oracle, PuiseuxSeries};

use crate::error::{precondition, Error, Result};
use crate::field::AlgebraicNumber;
use crate::form::OneForm;
use crate::poly::{ClosedPoint, Poly, RationalFunction};

/// A point of the projective line rational over the working field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Point {
    Finite(AlgebraicNumber),
    Infinity,
}

impl Point {
    /// The rational point underlying a closed point of degree one.
    pub fn from_closed(p: &ClosedPoint) -> Result<Self> {
        match p {
            ClosedPoint::Infinity => Ok(Point::Infinity),
            ClosedPoint::Finite(q) if q.deg() == 1 => Ok(Point::Finite(-q.coeff(0))),
            ClosedPoint::Finite(_) => Err(precondition("point of degree > 1 must be split first")),
        }
    }

    pub fn to_closed(&self) -> ClosedPoint {
        match self {
            Point::Finite(a) => ClosedPoint::Finite(Poly::linear(a)),
            Point::Infinity => ClosedPoint::Infinity,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(a) => write!(f, "{a}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

/// The affine coordinate a series expands: `x` near finite points, `1/x`
/// near infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    X,
    InverseX,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// `r = 1`, `D(T) = c T`.
    I,
    /// `r < 1`, `D(T) = T^r`.
    II,
    /// `r > 1`, `D(T) = T^r + c T^(2r-1)`.
    III,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub point: Point,
    pub r: i64,
    pub case: Case,
    /// The invariant `c` (cases I and III).
    pub c: Option<AlgebraicNumber>,
}

/// Order `r` of the dual derivation `D` at `p`: the valuation of `D(t)` for
/// a local parameter `t`. It equals `-ord_p(w)`.
pub fn local_order(w: &OneForm, p: &ClosedPoint) -> Result<i64> {
    Ok(-w.order_at(p)?)
}

/// `lcm(1 - r)` over the poles of the derivation (`r < 0`), which are the
/// zeros of the form.
pub fn ramification_exponent(w: &OneForm) -> Result<u64> {
    let zeros = w.divisor()?.positive_part();
    Ok(zeros.iter().fold(1u64, |e, (_, m)| {
        let k = (1 + m) as u64;
        num_integer::Integer::lcm(&e, &k)
    }))
}

/// The constant solutions: points where the derivation vanishes (`r >= 1`),
/// i.e. the poles of the form.
pub fn constant_solutions(w: &OneForm) -> Result<Vec<ClosedPoint>> {
    Ok(w.divisor()?.negative_part().support())
}

/// The derivation in the chart at `p`: `G` with `s' = G(s)`, and the chart
/// coordinate `s0` of `p`.
pub(crate) fn chart_derivation(w: &OneForm, p: &Point) -> Result<(Chart, RationalFunction, AlgebraicNumber)> {
    let g = w.dual_derivation()?;
    let field = w.field();
    match p {
        Point::Finite(a) => {
            if a.field() != field {
                return Err(Error::FieldMismatch);
            }
            Ok((Chart::X, g, a.clone()))
        }
        Point::Infinity => {
            let s = RationalFunction::x(field);
            let inv = s.inverse()?;
            let big_g = -&(&s.pow(2)? * &g.compose(&inv));
            Ok((Chart::InverseX, big_g, field.zero()))
        }
    }
}

#[cfg(test)]
mod tests;
