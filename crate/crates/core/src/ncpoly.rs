//! The free associative algebra on `a, b, c` over rational functions in `q`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ratfunc::RatFunc;
use crate::scalar::Coefficient;
use crate::word::{Generator, Word};

/// Finite linear combination of words. Zero coefficients are never stored,
/// so structural equality is algebraic equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePoly<T> {
    terms: BTreeMap<Word, RatFunc<T>>,
}

impl<T: Coefficient> FreePoly<T> {
    pub fn zero() -> Self {
        FreePoly { terms: BTreeMap::new() }
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        Self::monomial(Word::empty(), RatFunc::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(Word::single(g))
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, RatFunc::one())
    }

    pub fn monomial(w: Word, coeff: RatFunc<T>) -> Self {
        let mut p = Self::zero();
        p.add_term(w, coeff);
        p
    }

    /// Sum of the given generators, each with coefficient one.
    pub fn sum_of(gens: &[Generator]) -> Self {
        let mut p = Self::zero();
        for &g in gens {
            p.add_term(Word::single(g), RatFunc::one());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, RatFunc<T>)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `coeff * w` in place, pruning if the coefficient cancels.
    pub fn add_term(&mut self, w: Word, coeff: RatFunc<T>) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, k: &RatFunc<T>) {
        if k.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            let c = if k.is_one() { c.clone() } else { c * k };
            self.add_term(w.clone(), c);
        }
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc<T>)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, RatFunc<T>)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&RatFunc<T>> {
        self.terms.get(w)
    }

    pub fn coeff_or_zero(&self, w: &Word) -> RatFunc<T> {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`is_zero`](Self::is_zero).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn scale(&self, k: &RatFunc<T>) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Multiplies on the right by a single word.
    pub fn mul_word(&self, w: &Word) -> Self {
        FreePoly {
            terms: self.terms.iter().map(|(u, c)| (u.concat(w), c.clone())).collect(),
        }
    }

    /// Multiplies on the left by a single word.
    pub fn word_mul(&self, w: &Word) -> Self {
        FreePoly {
            terms: self.terms.iter().map(|(u, c)| (w.concat(u), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<T: Coefficient> Default for FreePoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Coefficient> Add<&'a FreePoly<T>> for &'a FreePoly<T> {
    type Output = FreePoly<T>;

    fn add(self, rhs: &'a FreePoly<T>) -> FreePoly<T> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a, T: Coefficient> Sub<&'a FreePoly<T>> for &'a FreePoly<T> {
    type Output = FreePoly<T>;

    fn sub(self, rhs: &'a FreePoly<T>) -> FreePoly<T> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<T: Coefficient> Neg for &FreePoly<T> {
    type Output = FreePoly<T>;

    fn neg(self) -> FreePoly<T> {
        FreePoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Bilinear extension of concatenation.
impl<'a, T: Coefficient> Mul<&'a FreePoly<T>> for &'a FreePoly<T> {
    type Output = FreePoly<T>;

    fn mul(self, rhs: &'a FreePoly<T>) -> FreePoly<T> {
        let mut out = FreePoly::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &rhs.terms {
                out.add_term(u.concat(v), cu * cv);
            }
        }
        out
    }
}

impl<T: Coefficient> fmt::Display for FreePoly<T> {
    /// `coeff·word` terms joined by ` + `; coefficients other than one are
    /// parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, self.terms.iter())
    }
}

/// Shared text rendering, so callers can present terms in another order.
pub fn render_terms<'a, T: Coefficient>(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (&'a Word, &'a RatFunc<T>)>,
) -> fmt::Result {
    let mut first = true;
    for (w, c) in terms {
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match (c.is_one(), w.is_empty()) {
            (true, _) => f.write_str(&w.to_power_string())?,
            (false, true) => write!(f, "({c})")?,
            (false, false) => write!(f, "({c})·{}", w.to_power_string())?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
