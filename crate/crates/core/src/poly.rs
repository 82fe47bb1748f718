//! Dense univariate polynomials in `q` over an integer coefficient ring.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, EvalFloat};

/// Polynomial in `q`, coefficients stored in ascending degree order.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The indeterminate itself.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(T::one(), k)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> T {
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// The associate with a positive leading coefficient.
    pub fn normalize_sign(self) -> Self {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self,
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    fn div_scalar_exact(&self, k: &T) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.clone() / k.clone()).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder in `Z[q]` (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if dd == 0 {
            let k = &divisor.coeffs[0];
            if self.coeffs.iter().any(|c| !c.is_multiple_of(k)) {
                return None;
            }
            return Some(self.div_scalar_exact(k));
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - qk.clone() * dc.clone();
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// A constant multiple of the remainder of `self` by `divisor`.
    ///
    /// The leading coefficient of the running remainder is scaled only when the
    /// divisor's leading coefficient does not already divide it.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let Some(dd) = divisor.degree() else {
            return self.clone();
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().cloned().unwrap_or_else(T::zero);
            let (qk, r) = top.div_rem(&lead);
            let factor = if r.is_zero() {
                qk
            } else {
                for c in rem.iter_mut() {
                    *c = c.clone() * lead.clone();
                }
                top
            };
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - factor.clone() * dc.clone();
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Polynomial { coeffs: rem }
    }

    /// Greatest common divisor, returned primitive with positive leading
    /// coefficient. Integer content is ignored; see [`Polynomial::gcd_full`].
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        if self.is_zero() {
            return Ok(other.primitive_part().normalize_sign());
        }
        if other.is_zero() {
            return Ok(self.primitive_part().normalize_sign());
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::one());
        }
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        Ok(a.normalize_sign())
    }

    /// Greatest common divisor in `Z[q]`: the primitive gcd times the gcd of
    /// the contents. Positive leading coefficient.
    pub fn gcd_full(&self, other: &Self) -> Result<Self> {
        let prim = self.gcd(other)?;
        let content = self.content().gcd(&other.content());
        Ok(prim.scale(&content))
    }

    /// Horner evaluation at a complex point.
    pub fn eval<F: EvalFloat>(&self, at: Complex<F>) -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * at + Complex::new(to_float::<T, F>(c), F::zero());
        }
        acc
    }

    /// Largest coefficient magnitude, as a float.
    pub fn max_abs_coeff<F: EvalFloat>(&self) -> F {
        self.coeffs
            .iter()
            .map(|c| to_float::<T, F>(&c.abs()))
            .fold(F::zero(), F::max)
    }

    /// Lowest-degree nonzero coefficient.
    pub fn trailing(&self) -> Option<&T> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }
}

pub(crate) fn int<T: Coefficient>(v: i64) -> T {
    T::from_i64(v).expect("coefficient type cannot represent small integer")
}

pub(crate) fn to_float<T: Coefficient, F: EvalFloat>(c: &T) -> F {
    c.to_f64().and_then(F::from).unwrap_or_else(|| {
        if c.is_negative() {
            F::neg_infinity()
        } else {
            F::infinity()
        }
    })
}

impl<T: Coefficient> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<'a, T: Coefficient> Add<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Polynomial::new(coeffs)
    }
}

impl<'a, T: Coefficient> Sub<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl<'a, T: Coefficient> Mul<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Coefficient> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        -self.clone()
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Coefficient> $tr<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }

        impl<'a, T: Coefficient> $tr<&'a Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Coefficient> fmt::Display for Polynomial<T> {
    /// Ascending powers: `1+q+q^2`, `-1+2q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("q")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> PartialOrd for Polynomial<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then coefficients from the top down. Only used to give
/// collections a deterministic order.
impl<T: Coefficient> Ord for Polynomial<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type P = Polynomial<BigInt>;

    fn p(c: &[i64]) -> P {
        P::from_i64s(c)
    }

    #[test]
    fn canonical_trims_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        let x = p(&[3, -1, 4]);
        assert_eq!(&x + &P::zero(), x);
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 2, 1, 1]));
        assert_eq!(&x - &x, P::zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[1, 0, -1]).gcd(&p(&[1, -1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[2, 4, -6]).gcd(&P::zero()).unwrap(), p(&[-1, -2, 3]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, -1])).unwrap(), P::one());
        assert_eq!(P::zero().gcd(&P::zero()), Err(Error::GcdUndefined));
    }

    #[test]
    fn gcd_with_non_monic_inputs() {
        // (2q+1)(q+3) and (2q+1)(3q-1)
        let f = p(&[1, 2]);
        let a = &f * &p(&[3, 1]);
        let b = &f * &p(&[-1, 3]);
        assert_eq!(a.gcd(&b).unwrap(), f);
        let a6 = a.scale(&BigInt::from(6));
        let b4 = b.scale(&BigInt::from(4));
        assert_eq!(a6.gcd_full(&b4).unwrap(), f.scale(&BigInt::from(2)));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, -1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
        assert_eq!(p(&[1, 4]).div_exact(&p(&[2])), None);
        assert_eq!(a.div_exact(&P::zero()), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 1, 1]).to_string(), "1+q+q^2");
        assert_eq!(p(&[-1, 0, 0, 2]).to_string(), "-1+2q^3");
        assert_eq!(p(&[0, -1, -1]).to_string(), "-q-q^2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn machine_integer_coefficients() {
        let a = Polynomial::<i64>::from_i64s(&[1, 0, -1]);
        let b = Polynomial::<i64>::from_i64s(&[1, -1]);
        assert_eq!(a.div_exact(&b), Some(Polynomial::from_i64s(&[1, 1])));
        assert_eq!(a.gcd(&b).unwrap(), Polynomial::from_i64s(&[-1, 1]));
    }

    #[test]
    fn horner_eval() {
        let v = p(&[1, 1, 1]).eval(Complex::new(2.0f64, 0.0));
        assert_eq!(v, Complex::new(7.0, 0.0));
    }
}
