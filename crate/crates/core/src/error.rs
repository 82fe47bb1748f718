use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("pole at evaluation point (num = {num}, den = {den})")]
    Pole { num: Complex64, den: Complex64 },
    #[error("invalid generator '{ch}' at position {pos}")]
    InvalidGenerator { ch: char, pos: usize },
    #[error("invalid coefficient '{0}'")]
    InvalidCoefficient(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
