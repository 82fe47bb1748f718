//! Normal ordering modulo the two commutation systems.
//!
//! System A: `ab = q ba + c`, `ac = q² ca`, `cb = q² bc`; normal words are
//! `b^α c^β a^γ`.
//!
//! System B: `ac = q² ca + ξ b²`, `ab = q² ba`, `bc = q² cb`; normal words are
//! `c^α b^β a^γ`.
//!
//! Each relation is oriented left to right. A word is reduced by rewriting an
//! adjacent out-of-order pair until none remain.
//!
//! Termination uses the measure `(weighted length, inversions)`, compared
//! lexicographically. Both components are compatible with concatenation: the
//! weighted length is additive, and an adjacent swap changes the inversion
//! count by exactly one whatever surrounds it. System A weighs every letter 1
//! (`ab -> c` shortens). System B weighs `a` and `c` as 2 and `b` as 1, so
//! `ac -> bb` drops the weight from 4 to 2. Plain length would not do for B:
//! in `a·ac -> a·bb` the inversion count stays at 2.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::ncpoly::FreePoly;
use crate::qcomb::xi;
use crate::ratfunc::RatFunc;
use crate::scalar::Coefficient;
use crate::word::{Generator, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    /// `ab = q ba + c`, `ac = q² ca`, `cb = q² bc`.
    A,
    /// `ac = q² ca + ξ b²`, `ab = q² ba`, `bc = q² cb`.
    B,
    /// System A with `c = 0` in the first relation: `ab = q ba`.
    AC0,
    /// System B with `ξ = 0`: `ac = q² ca`.
    BXi0,
}

impl SystemId {
    pub const ALL: [SystemId; 4] = [SystemId::A, SystemId::B, SystemId::AC0, SystemId::BXi0];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::A => "A",
            SystemId::B => "B",
            SystemId::AC0 => "A-c0",
            SystemId::BXi0 => "B-xi0",
        }
    }

    /// Rank of each generator in the target order, indexed `[a, b, c]`.
    pub fn normal_rank(self) -> [u8; 3] {
        match self {
            // b < c < a
            SystemId::A | SystemId::AC0 => [2, 0, 1],
            // c < b < a
            SystemId::B | SystemId::BXi0 => [2, 1, 0],
        }
    }

    /// Letter weights for the termination measure, indexed `[a, b, c]`.
    pub fn weights(self) -> [usize; 3] {
        match self {
            SystemId::A | SystemId::AC0 => [1, 1, 1],
            SystemId::B | SystemId::BXi0 => [2, 1, 2],
        }
    }

    /// The generators whose sum is raised to a power in the matching
    /// expansion: `a + b` for System A, `a + b + c` for System B.
    pub fn summands(self) -> &'static [Generator] {
        match self {
            SystemId::A | SystemId::AC0 => &[Generator::A, Generator::B],
            SystemId::B | SystemId::BXi0 => &[Generator::A, Generator::B, Generator::C],
        }
    }

    /// Generators in normal order, e.g. `[b, c, a]` for System A.
    pub fn normal_letters(self) -> [Generator; 3] {
        let rank = self.normal_rank();
        let mut gens = Generator::ALL;
        gens.sort_by_key(|g| rank[g.index()]);
        gens
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(SystemId::A),
            "B" | "b" => Ok(SystemId::B),
            "A-c0" | "a-c0" => Ok(SystemId::AC0),
            "B-xi0" | "b-xi0" => Ok(SystemId::BXi0),
            _ => Err(format!("unknown system '{s}' (expected A, B, A-c0 or B-xi0)")),
        }
    }
}

/// `pattern -> replacement` for one out-of-order pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<T> {
    pub pattern: [Generator; 2],
    pub replacement: FreePoly<T>,
}

#[derive(Clone, Debug)]
pub struct RelationSystem<T> {
    id: SystemId,
    rules: Vec<RewriteRule<T>>,
    // rule index by [left][right]
    table: [[Option<usize>; 3]; 3],
}

impl<T: Coefficient> RelationSystem<T> {
    /// Builds the oriented rules for `id`.
    ///
    /// Panics if a rule fails to decrease the termination measure or a
    /// decreasing pair has no rule.
    pub fn new(id: SystemId) -> Self {
        use Generator::{A, B, C};

        let q = RatFunc::<T>::q_pow(1);
        let q2 = RatFunc::<T>::q_pow(2);
        let word = |s: &[Generator]| Word::new(s.to_vec());
        let swap = |l: Generator, r: Generator, k: &RatFunc<T>| RewriteRule {
            pattern: [l, r],
            replacement: FreePoly::monomial(word(&[r, l]), k.clone()),
        };

        let rules = match id {
            SystemId::A | SystemId::AC0 => {
                let mut ab = swap(A, B, &q);
                if id == SystemId::A {
                    ab.replacement.add_term(word(&[C]), RatFunc::one());
                }
                vec![ab, swap(A, C, &q2), swap(C, B, &q2)]
            }
            SystemId::B | SystemId::BXi0 => {
                let mut ac = swap(A, C, &q2);
                if id == SystemId::B {
                    ac.replacement.add_term(word(&[B, B]), xi());
                }
                vec![ac, swap(A, B, &q2), swap(B, C, &q2)]
            }
        };

        let mut table = [[None; 3]; 3];
        for (k, rule) in rules.iter().enumerate() {
            let [l, r] = rule.pattern;
            table[l.index()][r.index()] = Some(k);
        }
        let sys = RelationSystem { id, rules, table };
        sys.check_rules();
        sys
    }

    fn check_rules(&self) {
        let rank = self.id.normal_rank();
        for l in Generator::ALL {
            for r in Generator::ALL {
                let decreasing = rank[l.index()] > rank[r.index()];
                assert_eq!(
                    decreasing,
                    self.table[l.index()][r.index()].is_some(),
                    "system {}: rule coverage wrong for {l}{r}",
                    self.id
                );
            }
        }
        for rule in &self.rules {
            let top = self.measure(&Word::new(rule.pattern.to_vec()));
            for w in rule.replacement.words() {
                assert!(
                    self.measure(w) < top,
                    "system {}: rule {}{} -> {w} does not decrease the measure",
                    self.id,
                    rule.pattern[0],
                    rule.pattern[1]
                );
            }
        }
    }

    pub fn id(&self) -> SystemId {
        self.id
    }

    pub fn rules(&self) -> &[RewriteRule<T>] {
        &self.rules
    }

    pub fn rule_for(&self, l: Generator, r: Generator) -> Option<&RewriteRule<T>> {
        self.table[l.index()][r.index()].map(|k| &self.rules[k])
    }

    fn rank(&self, g: Generator) -> u8 {
        self.id.normal_rank()[g.index()]
    }

    /// `(weighted length, inversion count)`; every rewrite strictly lowers it.
    pub fn measure(&self, w: &Word) -> (usize, usize) {
        let weights = self.id.weights();
        let weight = w.letters().iter().map(|g| weights[g.index()]).sum();
        let mut seen = [0usize; 3];
        let mut inversions = 0;
        for &g in w.letters() {
            let r = self.rank(g);
            inversions += Generator::ALL
                .iter()
                .filter(|h| self.rank(**h) > r)
                .map(|h| seen[h.index()])
                .sum::<usize>();
            seen[g.index()] += 1;
        }
        (weight, inversions)
    }

    /// True iff ranks are non-decreasing along the word.
    pub fn is_normal(&self, w: &Word) -> bool {
        w.letters().windows(2).all(|p| self.rank(p[0]) <= self.rank(p[1]))
    }

    /// Start indices of every adjacent out-of-order pair.
    pub fn redexes(&self, w: &Word) -> Vec<usize> {
        w.letters()
            .windows(2)
            .enumerate()
            .filter(|(_, p)| self.rank(p[0]) > self.rank(p[1]))
            .map(|(i, _)| i)
            .collect()
    }

    /// Rewrites the pair starting at `pos`, reattaching the rest of the word.
    ///
    /// Panics if that pair is already in order.
    pub fn rewrite_at(&self, w: &Word, pos: usize) -> FreePoly<T> {
        let letters = w.letters();
        let rule = self
            .rule_for(letters[pos], letters[pos + 1])
            .expect("rewrite position must hold an out-of-order pair");
        let prefix = Word::new(letters[..pos].to_vec());
        let suffix = Word::new(letters[pos + 2..].to_vec());
        rule.replacement.word_mul(&prefix).mul_word(&suffix)
    }

    /// One rewrite at the leftmost out-of-order pair; `None` if `w` is normal.
    pub fn rewrite_step(&self, w: &Word) -> Option<FreePoly<T>> {
        let pos = self.redexes(w).first().copied()?;
        Some(self.rewrite_at(w, pos))
    }

    /// Normal form using the leftmost strategy.
    pub fn normalize(&self, p: &FreePoly<T>) -> FreePoly<T> {
        self.normalize_with(p, &mut Leftmost)
    }

    pub fn normalize_word(&self, w: &Word) -> FreePoly<T> {
        self.normalize(&FreePoly::word(w.clone()))
    }

    /// Normal form, choosing the rewrite position in each word with
    /// `strategy`.
    ///
    /// Words are reduced in decreasing measure order, so every word collects
    /// all its contributions before it is rewritten once.
    pub fn normalize_with<S: Strategy + ?Sized>(&self, p: &FreePoly<T>, strategy: &mut S) -> FreePoly<T> {
        let mut pending: BTreeMap<((usize, usize), Word), RatFunc<T>> = BTreeMap::new();
        let mut out = FreePoly::zero();

        let push = |pending: &mut BTreeMap<((usize, usize), Word), RatFunc<T>>, w: Word, c: RatFunc<T>| {
            let key = (self.measure(&w), w);
            match pending.get_mut(&key) {
                Some(existing) => {
                    let sum = &*existing + &c;
                    if sum.is_zero() {
                        pending.remove(&key);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    pending.insert(key, c);
                }
            }
        };

        for (w, c) in p.terms() {
            push(&mut pending, w.clone(), c.clone());
        }
        while let Some(((_, w), c)) = pending.pop_last() {
            let redexes = self.redexes(&w);
            if redexes.is_empty() {
                out.add_term(w, c);
                continue;
            }
            let pos = redexes[strategy.choose(&w, &redexes)];
            for (v, k) in self.rewrite_at(&w, pos).into_terms() {
                push(&mut pending, v, &k * &c);
            }
        }
        out
    }
}

/// Picks which out-of-order pair of a word to rewrite next.
pub trait Strategy {
    /// Returns an index into `redexes` (never empty).
    fn choose(&mut self, word: &Word, redexes: &[usize]) -> usize;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Leftmost;

impl Strategy for Leftmost {
    fn choose(&mut self, _word: &Word, _redexes: &[usize]) -> usize {
        0
    }
}

/// Uniformly random position.
#[derive(Clone, Debug)]
pub struct RandomPosition<R>(pub R);

impl<R: Rng> Strategy for RandomPosition<R> {
    fn choose(&mut self, _word: &Word, redexes: &[usize]) -> usize {
        self.0.gen_range(0..redexes.len())
    }
}
