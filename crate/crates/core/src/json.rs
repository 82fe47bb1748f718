//! Serde encodings shared with downstream tools.
//!
//! * polynomial: array of decimal strings, ascending degree (`["1","1","1"]`
//!   is `1+q+q^2`);
//! * rational function: `{"num": [...], "den": [...]}`;
//! * free-algebra element: array of `{"word": "bca", "coeff": {...}}` in
//!   canonical word order, the empty word as `""`.
//!
//! Decimal strings keep arbitrary-precision coefficients exact. Decoding
//! re-canonicalises, so a decoded value compares equal to the one encoded.

use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ncpoly::FreePoly;
use crate::poly::Polynomial;
use crate::ratfunc::RatFunc;
use crate::scalar::Coefficient;
use crate::word::Word;

impl<T: Coefficient> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for Polynomial<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffsVisitor<T>(PhantomData<T>);

        impl<'de, T: Coefficient> Visitor<'de> for CoeffsVisitor<T> {
            type Value = Polynomial<T>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of decimal integer strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<T>()
                        .map_err(|_| de::Error::custom(format!("invalid coefficient '{s}'")))?;
                    coeffs.push(c);
                }
                Ok(Polynomial::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffsVisitor(PhantomData))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Coefficient")]
struct RatFuncRepr<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Coefficient> Serialize for RatFunc<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for RatFunc<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RatFuncRepr::<T>::deserialize(deserializer)?;
        RatFunc::new(repr.num, repr.den).map_err(de::Error::custom)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// One `{"word", "coeff"}` entry of an encoded free-algebra element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Coefficient")]
pub struct Term<T> {
    pub word: Word,
    pub coeff: RatFunc<T>,
}

impl<T: Coefficient> Serialize for FreePoly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (w, c) in self.terms() {
            seq.serialize_element(&Term {
                word: w.clone(),
                coeff: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for FreePoly<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term<T>>::deserialize(deserializer)?;
        Ok(FreePoly::from_terms(terms.into_iter().map(|t| (t.word, t.coeff))))
    }
}
