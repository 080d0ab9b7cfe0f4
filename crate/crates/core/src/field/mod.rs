//! Exact arithmetic: rationals, number fields `Q[t]/(m)`, embeddings between
//! them, and the integer linear algebra used for residue groups.

mod adjoin;
pub mod linalg;
mod number;
pub(crate) mod qpoly;
mod zmodule;

pub use adjoin::{adjoin_root, split_all, split_completely, AdjoinedRoot, Splitting};
pub use number::{AlgebraicNumber, Embedding, NumberField};
pub use zmodule::{z_module_basis, ZBasis};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
