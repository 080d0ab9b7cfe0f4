//! Exact analysis of autonomous first-order differential equations `u' = g(u)`
//! with `g` rational, viewed as rational 1-forms `dx/g` on the projective line.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: rationals are
//! arbitrary precision, constants live in an explicit number field `Q(a)` which
//! is extended on demand.
//!
//! Module map:
//!
//! * [`field`]: rationals, number fields, embeddings, Z-module bases.
//! * [`poly`]: polynomials, rational functions, resultants, factorization,
//!   closed points and divisors.
//! * [`form`]: 1-forms, divisors, residues, Hermite reduction and the
//!   logarithmic decomposition `w = sum a_i du_i/u_i + dv`.
//! * [`classify`]: exact / exponential / general type, pullbacks, Moebius
//!   isomorphisms.
//! * [`formal`]: local orders, normal forms and Puiseux series solutions.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod field;
pub mod form;
pub mod formal;
pub mod poly;

pub use classify::{Classification, Mobius};
pub use error::{Error, Result};
pub use field::{AlgebraicNumber, Embedding, NumberField, Rational};
pub use form::{LogDecomposition, OneForm};
pub use poly::{ClosedPoint, Divisor, Poly, RationalFunction};
