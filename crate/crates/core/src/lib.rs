//! Exact expansion of `(a+b)^n` and `(a+b+c)^n` in algebras with
//! q-commutation relations.
//!
//! The algebra is generic over the integer coefficient ring (see
//! [`Coefficient`]); the aliases below fix it to `BigInt`, which is what the
//! verification suites and the CLI use.

pub mod error;
pub mod json;
pub mod ncpoly;
pub mod poly;
pub mod qcomb;
pub mod ratfunc;
pub mod rewrite;
pub mod scalar;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use ncpoly::FreePoly;
pub use poly::Polynomial;
pub use ratfunc::RatFunc;
pub use rewrite::{RelationSystem, SystemId};
pub use scalar::{Coefficient, EvalFloat};
pub use word::{Generator, Word};

pub use num_bigint::BigInt;

/// Polynomial in `q` with arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Canonical rational function in `q` over `BigInt`.
pub type RationalFunction = RatFunc<BigInt>;
/// Element of the free algebra on `a, b, c` over [`RationalFunction`].
pub type NcPolynomial = FreePoly<BigInt>;
/// Relation system over [`RationalFunction`] coefficients.
pub type Relations = RelationSystem<BigInt>;
