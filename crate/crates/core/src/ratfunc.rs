//! Canonical rational functions in `q`.
//!
//! A value `num/den` is stored with `gcd(num, den) = 1` in `Z[q]` and a
//! positive leading coefficient on `den`. Zero is `0/1`. Under these rules two
//! rational functions are equal iff their fields are equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::{Complex, Complex64};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, Polynomial};
use crate::scalar::{Coefficient, EvalFloat};

/// Relative size of the pole cutoff used by [`RatFunc::eval`].
pub const POLE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Coefficient> RatFunc<T> {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd_full(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Fixes the sign of an already coprime pair.
    fn from_coprime(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        if den.leading().is_some_and(|l| l.is_negative()) {
            RatFunc { num: -num, den: -den }
        } else {
            RatFunc { num, den }
        }
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        RatFunc {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(Polynomial::constant(int(v)))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// `q^k`
    pub fn q_pow(k: usize) -> Self {
        Self::from_poly(Polynomial::q_pow(k))
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a unit, i.e. the value lies in `Z[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial<T>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        // num and den stay coprime under powers
        Self::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale_int(&self, k: &T) -> Self {
        self * &Self::from_poly(Polynomial::constant(k.clone()))
    }

    /// Evaluates `num(at) / den(at)` by Horner's scheme.
    ///
    /// Fails with [`Error::Pole`] when
    /// `|den(at)| < 1e-12 * (1 + max |den coeff|)`.
    pub fn eval<F: EvalFloat>(&self, at: Complex<F>) -> Result<Complex<F>> {
        let n = self.num.eval(at);
        let d = self.den.eval(at);
        let tol = F::from(POLE_TOLERANCE).unwrap() * (F::one() + self.den.max_abs_coeff::<F>());
        let norm = d.norm();
        if norm.is_nan() || norm < tol {
            return Err(Error::Pole {
                num: to_c64(n),
                den: to_c64(d),
            });
        }
        Ok(n / d)
    }
}

fn to_c64<F: EvalFloat>(z: Complex<F>) -> Complex64 {
    Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

impl<T: Coefficient> Zero for RatFunc<T> {
    fn zero() -> Self {
        RatFunc::zero()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Coefficient> One for RatFunc<T> {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl<'a, T: Coefficient> Add<&'a RatFunc<T>> for &'a RatFunc<T> {
    type Output = RatFunc<T>;

    fn add(self, rhs: &'a RatFunc<T>) -> RatFunc<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::new(num, self.den.clone()).expect("nonzero denominator");
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = self.den.gcd_full(&rhs.den).expect("denominators are nonzero");
        let b_red = self.den.div_exact(&g).expect("gcd divides");
        let d_red = rhs.den.div_exact(&g).expect("gcd divides");
        let t = &(&self.num * &d_red) + &(&rhs.num * &b_red);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let g2 = t.gcd_full(&g).expect("nonzero");
        let num = t.div_exact(&g2).expect("gcd divides");
        let den = &b_red * &rhs.den.div_exact(&g2).expect("g2 divides g divides d");
        RatFunc::from_coprime(num, den)
    }
}

impl<T: Coefficient> Neg for &RatFunc<T> {
    type Output = RatFunc<T>;

    fn neg(self) -> RatFunc<T> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<T: Coefficient> Neg for RatFunc<T> {
    type Output = RatFunc<T>;

    fn neg(self) -> RatFunc<T> {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<'a, T: Coefficient> Sub<&'a RatFunc<T>> for &'a RatFunc<T> {
    type Output = RatFunc<T>;

    fn sub(self, rhs: &'a RatFunc<T>) -> RatFunc<T> {
        self + &(-rhs)
    }
}

impl<'a, T: Coefficient> Mul<&'a RatFunc<T>> for &'a RatFunc<T> {
    type Output = RatFunc<T>;

    fn mul(self, rhs: &'a RatFunc<T>) -> RatFunc<T> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel a/b * c/d by gcd(a, d) and gcd(c, b)
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

fn cancel<T: Coefficient>(n: &Polynomial<T>, d: &Polynomial<T>) -> (Polynomial<T>, Polynomial<T>) {
    if d.is_one() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd_full(d).expect("nonzero");
    if g.is_one() {
        return (n.clone(), d.clone());
    }
    (
        n.div_exact(&g).expect("gcd divides"),
        d.div_exact(&g).expect("gcd divides"),
    )
}

/// Panics on division by zero; use [`RatFunc::checked_div`] to get an error.
impl<'a, T: Coefficient> Div<&'a RatFunc<T>> for &'a RatFunc<T> {
    type Output = RatFunc<T>;

    fn div(self, rhs: &'a RatFunc<T>) -> RatFunc<T> {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Coefficient> $tr<RatFunc<T>> for RatFunc<T> {
            type Output = RatFunc<T>;

            fn $method(self, rhs: RatFunc<T>) -> RatFunc<T> {
                (&self).$method(&rhs)
            }
        }

        impl<'a, T: Coefficient> $tr<&'a RatFunc<T>> for RatFunc<T> {
            type Output = RatFunc<T>;

            fn $method(self, rhs: &'a RatFunc<T>) -> RatFunc<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl<T: Coefficient> From<Polynomial<T>> for RatFunc<T> {
    fn from(p: Polynomial<T>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<T: Coefficient> fmt::Display for RatFunc<T> {
    /// Prints `num` or `(num)/(den)`. The pair is flipped in sign when that
    /// makes the denominator's lowest term positive, so `φ₂` reads
    /// `(1+q^2)/(1-q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let flip = self.den.trailing().is_some_and(|c| c.is_negative());
        let (num, den) = if flip {
            (-&self.num, -&self.den)
        } else {
            (self.num.clone(), self.den.clone())
        };
        let wrap = |p: &Polynomial<T>| {
            let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            if single && !p.trailing().is_some_and(|c| c.is_negative()) {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}
