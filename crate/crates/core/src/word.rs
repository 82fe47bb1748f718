//! Generators and words of the free monoid on `{a, b, c}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
    C,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::A, Generator::B, Generator::C];

    pub fn letter(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
        }
    }

    pub fn from_letter(ch: char) -> Option<Self> {
        match ch {
            'a' => Some(Generator::A),
            'b' => Some(Generator::B),
            'c' => Some(Generator::C),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A monomial of the free algebra. The empty word is the identity.
///
/// Words order by length first, then lexicographically with `a < b < c`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn single(g: Generator) -> Self {
        Word(vec![g])
    }

    /// `g^n`
    pub fn power(g: Generator, n: usize) -> Self {
        Word(vec![g; n])
    }

    /// Concatenation of `g1^n1 g2^n2 ...`.
    pub fn from_powers(parts: &[(Generator, usize)]) -> Self {
        Word(parts.iter().flat_map(|&(g, n)| std::iter::repeat_n(g, n)).collect())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Number of occurrences of each generator, indexed `[a, b, c]`.
    pub fn counts(&self) -> [usize; 3] {
        let mut counts = [0; 3];
        for g in &self.0 {
            counts[g.index()] += 1;
        }
        counts
    }

    /// Run-length form: `bbca` becomes `[(b, 2), (c, 1), (a, 1)]`.
    pub fn runs(&self) -> Vec<(Generator, usize)> {
        let mut runs: Vec<(Generator, usize)> = Vec::new();
        for &g in &self.0 {
            match runs.last_mut() {
                Some((last, n)) if *last == g => *n += 1,
                _ => runs.push((g, 1)),
            }
        }
        runs
    }

    /// Renders as dot-separated powers, e.g. `b^2·c·a^3`; the empty word is `1`.
    pub fn to_power_string(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.runs()
            .into_iter()
            .map(|(g, n)| if n == 1 { g.to_string() } else { format!("{g}^{n}") })
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Every character must be `a`, `b` or `c`; the empty string is the
    /// identity. Positions in errors are 1-based.
    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| Generator::from_letter(ch).ok_or(Error::InvalidGenerator { ch, pos: i + 1 }))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

pub fn parse_word(s: &str) -> Result<Word, Error> {
    s.parse()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}
