//! Scalar traits the algebra is generic over.
//!
//! Exact coefficients are integers (`BigInt` in practice, machine integers
//! where the degree and exponent stay small). Numeric evaluation is generic
//! over any [`num_traits::Float`].

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer ring the polynomial coefficients live in.
///
/// Arithmetic is assumed exact; machine integers will overflow on large
/// q-factorials, so the crate-root aliases all use `BigInt`.
pub trait Coefficient:
    Clone + Debug + Display + FromStr + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone + Debug + Display + FromStr + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Float type used for complex evaluation.
pub trait EvalFloat: num_traits::Float + num_traits::FloatConst + Debug + Send + Sync + 'static {}

impl<F> EvalFloat for F where F: num_traits::Float + num_traits::FloatConst + Debug + Send + Sync + 'static {}
