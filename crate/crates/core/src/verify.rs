//! Exact checks of the two expansion theorems and their supporting identities.
//!
//! Every check compares two independent computations: a closed formula
//! against brute-force normal ordering, a recursion against a closed form, or
//! a degenerate expansion against a textbook Pascal-type recursion. Equality
//! is structural equality of canonical values, never a numeric tolerance.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::{Complex, Complex64};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::ncpoly::FreePoly;
use crate::poly::Polynomial;
use crate::qcomb::{phi_closed, phi_recursive_table, q2_multinomial, q_int, theta_a, theta_b, xi};
use crate::ratfunc::RatFunc;
use crate::rewrite::{Leftmost, RandomPosition, RelationSystem, SystemId};
use crate::scalar::{Coefficient, EvalFloat};
use crate::word::{Generator, Word};

/// Exponents `(α, β, γ)` of a normal word in the system's letter order
/// (`b^α c^β a^γ` for A, `c^α b^β a^γ` for B); `None` if the word is not of
/// that shape.
pub fn normal_exponents(sys: SystemId, w: &Word) -> Option<(usize, usize, usize)> {
    let order = sys.normal_letters();
    let mut exps = [0usize; 3];
    let mut slot = 0;
    for &g in w.letters() {
        while slot < 3 && order[slot] != g {
            slot += 1;
        }
        if slot == 3 {
            return None;
        }
        exps[slot] += 1;
    }
    Some((exps[0], exps[1], exps[2]))
}

/// The normal word with exponents `(α, β, γ)` for `sys`.
pub fn normal_word(sys: SystemId, alpha: usize, beta: usize, gamma: usize) -> Word {
    let [x, y, z] = sys.normal_letters();
    Word::from_powers(&[(x, alpha), (y, beta), (z, gamma)])
}

/// Degree of a normal word in the expansion grading: `α + 2β + γ` for the
/// A systems (`c` comes from `ab`), `α + β + γ` for the B systems.
pub fn expansion_degree(sys: SystemId, (alpha, beta, gamma): (usize, usize, usize)) -> usize {
    match sys {
        SystemId::A | SystemId::AC0 => alpha + 2 * beta + gamma,
        SystemId::B | SystemId::BXi0 => alpha + beta + gamma,
    }
}

/// All exponent triples of degree `n` that can carry a nonzero coefficient.
pub fn index_triples(sys: SystemId, n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    match sys {
        SystemId::A => {
            for beta in 0..=n / 2 {
                for alpha in 0..=n - 2 * beta {
                    out.push((alpha, beta, n - 2 * beta - alpha));
                }
            }
        }
        SystemId::AC0 => out.extend((0..=n).map(|alpha| (alpha, 0, n - alpha))),
        SystemId::B | SystemId::BXi0 => {
            for alpha in 0..=n {
                for beta in 0..=n - alpha {
                    out.push((alpha, beta, n - alpha - beta));
                }
            }
        }
    }
    out
}

/// Closed-form expansion of `(a+b)^n` (A systems) or `(a+b+c)^n`
/// (B systems) in normal-ordered words.
///
/// The degenerate systems use the same coefficient families with `c = 0`
/// (so `β = 0`) and with `φ_β` replaced by one.
pub fn expand_formula<T: Coefficient>(sys: SystemId, n: usize) -> FreePoly<T> {
    assert!(n >= 1, "exponent must be positive");
    FreePoly::from_terms(
        index_triples(sys, n)
            .into_iter()
            .map(|(al, be, ga)| (normal_word(sys, al, be, ga), coefficient(sys, al, be, ga))),
    )
}

/// Closed-form coefficient of the normal word with exponents `(α, β, γ)`.
/// Zero for `β > 0` in A-c0, where `c` never appears.
pub fn coefficient<T: Coefficient>(sys: SystemId, alpha: usize, beta: usize, gamma: usize) -> RatFunc<T> {
    match sys {
        SystemId::A => theta_a(alpha, beta, gamma),
        SystemId::AC0 if beta > 0 => RatFunc::zero(),
        SystemId::AC0 => theta_a(alpha, 0, gamma),
        SystemId::B => theta_b(alpha, beta, gamma),
        SystemId::BXi0 => q2_multinomial(alpha, beta, gamma),
    }
}

/// Brute-force expansion: multiply the sum of generators by itself left to
/// right, normal ordering after every product.
pub fn expand_oracle<T: Coefficient>(sys: SystemId, n: usize) -> FreePoly<T> {
    assert!(n >= 1, "exponent must be positive");
    oracle_powers(&RelationSystem::new(sys), n).pop().expect("n >= 1")
}

/// `[s^1, ..., s^n]`, each normal-ordered.
fn oracle_powers<T: Coefficient>(rel: &RelationSystem<T>, n: usize) -> Vec<FreePoly<T>> {
    let s = FreePoly::sum_of(rel.id().summands());
    let mut out = Vec::with_capacity(n);
    let mut acc = s.clone();
    out.push(acc.clone());
    for _ in 2..=n {
        acc = rel.normalize(&(&acc * &s));
        out.push(acc.clone());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Coefficient")]
pub struct Mismatch<T> {
    pub word: Word,
    pub formula: RatFunc<T>,
    pub oracle: RatFunc<T>,
}

/// Terms on which two elements differ, in canonical word order.
pub fn mismatches<T: Coefficient>(formula: &FreePoly<T>, oracle: &FreePoly<T>) -> Vec<Mismatch<T>> {
    let mut words: Vec<&Word> = formula.words().chain(oracle.words()).collect();
    words.sort();
    words.dedup();
    words
        .into_iter()
        .filter_map(|w| {
            let f = formula.coeff_or_zero(w);
            let o = oracle.coeff_or_zero(w);
            (f != o).then(|| Mismatch {
                word: w.clone(),
                formula: f,
                oracle: o,
            })
        })
        .collect()
}

/// Formula against oracle for one exponent.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "T: Coefficient")]
pub struct ExpansionReport<T> {
    pub system: SystemId,
    pub n: usize,
    #[serde(skip)]
    pub formula_terms: FreePoly<T>,
    #[serde(skip)]
    pub oracle_terms: FreePoly<T>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub mismatches: Vec<Mismatch<T>>,
    pub duration_ms: u64,
}

impl<T: Coefficient> ExpansionReport<T> {
    fn new(system: SystemId, n: usize, formula: FreePoly<T>, oracle: FreePoly<T>, started: Instant) -> Self {
        let mismatches = mismatches(&formula, &oracle);
        ExpansionReport {
            system,
            n,
            matched: mismatches.is_empty(),
            formula_terms: formula,
            oracle_terms: oracle,
            mismatches,
            duration_ms: elapsed_ms(started),
        }
    }
}

impl Serialize for SystemId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One report per `n = 1..=max_n`, in order.
pub fn verify_expansions<T: Coefficient>(sys: SystemId, max_n: usize) -> Vec<ExpansionReport<T>> {
    assert!(max_n >= 1, "max_n must be positive");
    let rel = RelationSystem::new(sys);
    let started = Instant::now();
    let oracles = oracle_powers(&rel, max_n);
    let oracle_ms = elapsed_ms(started);
    oracles
        .into_par_iter()
        .enumerate()
        .map(|(k, oracle)| {
            let t0 = Instant::now();
            let formula = expand_formula(sys, k + 1);
            let mut report = ExpansionReport::new(sys, k + 1, formula, oracle, t0);
            report.duration_ms += oracle_ms / max_n as u64;
            report
        })
        .collect()
}

/// Outcome of one named suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub suite: String,
    pub cases: usize,
    pub failures: usize,
    pub duration_ms: u64,
    /// Short descriptions of failing cases.
    pub failed_cases: Vec<String>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn from_cases(suite: impl Into<String>, started: Instant, cases: Vec<(String, bool)>) -> Self {
        let failed_cases: Vec<String> = cases.iter().filter(|(_, ok)| !ok).map(|(d, _)| d.clone()).collect();
        VerificationSummary {
            suite: suite.into(),
            cases: cases.len(),
            failures: failed_cases.len(),
            duration_ms: elapsed_ms(started),
            failed_cases,
        }
    }

    /// Merges several summaries under a new name.
    pub fn combine(suite: impl Into<String>, parts: &[VerificationSummary]) -> Self {
        VerificationSummary {
            suite: suite.into(),
            cases: parts.iter().map(|p| p.cases).sum(),
            failures: parts.iter().map(|p| p.failures).sum(),
            duration_ms: parts.iter().map(|p| p.duration_ms).sum(),
            failed_cases: parts.iter().flat_map(|p| p.failed_cases.iter().cloned()).collect(),
        }
    }
}

impl fmt::Display for VerificationSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} {}",
            self.suite,
            self.cases - self.failures,
            self.cases,
            if self.suite.starts_with("lemma") {
                "match"
            } else {
                "pass"
            },
        )
    }
}

fn elapsed_ms(started: Instant) -> u64 {
    started.elapsed().as_millis().try_into().unwrap_or(u64::MAX)
}

/// Summarises expansion reports, one case per exponent.
pub fn summarize_reports<T: Coefficient>(suite: &str, reports: &[ExpansionReport<T>]) -> VerificationSummary {
    let cases = reports
        .iter()
        .map(|r| (format!("system {} n={}", r.system, r.n), r.matched))
        .collect();
    let mut summary = VerificationSummary::from_cases(suite, Instant::now(), cases);
    summary.duration_ms = reports.iter().map(|r| r.duration_ms).max().unwrap_or(0);
    summary
}

/// Memoised `θ` with the zero convention for negative indices.
struct ThetaTable<T> {
    sys: SystemId,
    cache: HashMap<(usize, usize, usize), RatFunc<T>>,
}

impl<T: Coefficient> ThetaTable<T> {
    fn new(sys: SystemId) -> Self {
        ThetaTable {
            sys,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, alpha: i64, beta: i64, gamma: i64) -> RatFunc<T> {
        if alpha < 0 || beta < 0 || gamma < 0 {
            return RatFunc::zero();
        }
        let key = (alpha as usize, beta as usize, gamma as usize);
        let sys = self.sys;
        self.cache
            .entry(key)
            .or_insert_with(|| match sys {
                SystemId::A => theta_a(key.0, key.1, key.2),
                _ => theta_b(key.0, key.1, key.2),
            })
            .clone()
    }
}

/// Right-hand side of the coefficient recurrence at `(α, β, γ)`.
///
/// System A:
/// `θ(α,β,γ-1) + q^{γ+2β} θ(α-1,β,γ) + q^γ [γ+1]_q θ(α,β-1,γ+1)`.
///
/// System B:
/// `θ(α,β,γ-1) + q^{2γ} θ(α,β-1,γ) + q^{2γ+2β} θ(α-1,β,γ)
///  + ξ q^{2γ} [γ+1]_{q²} θ(α,β-2,γ+1)`.
fn recurrence_rhs<T: Coefficient>(table: &mut ThetaTable<T>, al: i64, be: i64, ga: i64) -> RatFunc<T> {
    let qp = |k: i64| RatFunc::<T>::q_pow(k as usize);
    let qint = |n: i64, base: usize| RatFunc::from_poly(q_int::<T>(n as usize, base));
    match table.sys {
        SystemId::A => {
            let t1 = table.get(al, be, ga - 1);
            let t2 = &qp(ga + 2 * be) * &table.get(al - 1, be, ga);
            let t3 = &(&qp(ga) * &qint(ga + 1, 1)) * &table.get(al, be - 1, ga + 1);
            &(&t1 + &t2) + &t3
        }
        _ => {
            let t1 = table.get(al, be, ga - 1);
            let t2 = &qp(2 * ga) * &table.get(al, be - 1, ga);
            let t3 = &qp(2 * ga + 2 * be) * &table.get(al - 1, be, ga);
            let t4 = &(&(&xi() * &qp(2 * ga)) * &qint(ga + 1, 2)) * &table.get(al, be - 2, ga + 1);
            &(&(&t1 + &t2) + &t3) + &t4
        }
    }
}

/// Checks the coefficient recurrence at every triple of degree
/// `1..=bound` (weighted degree for System A), plus the boundary values.
///
/// Panics unless `sys` is `A` or `B`.
pub fn verify_recurrences<T: Coefficient>(sys: SystemId, bound: usize) -> VerificationSummary {
    assert!(
        matches!(sys, SystemId::A | SystemId::B),
        "recurrences exist for systems A and B"
    );
    let started = Instant::now();
    let mut table = ThetaTable::<T>::new(sys);
    let mut cases = Vec::new();

    let boundary: &[(usize, usize, usize)] = match sys {
        SystemId::A => &[(1, 0, 0), (0, 0, 1)],
        _ => &[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    };
    for &(al, be, ga) in boundary {
        let v = table.get(al as i64, be as i64, ga as i64);
        cases.push((format!("boundary θ({al},{be},{ga}) = 1"), v.is_one()));
    }

    for n in 1..=bound {
        for (al, be, ga) in index_triples(sys, n) {
            let lhs = table.get(al as i64, be as i64, ga as i64);
            let rhs = recurrence_rhs(&mut table, al as i64, be as i64, ga as i64);
            cases.push((format!("recurrence at ({al},{be},{ga})"), lhs == rhs));
        }
    }
    VerificationSummary::from_cases(format!("recurrences-{sys}"), started, cases)
}

/// `φ_β` by recursion against the closed form for `β = 0..=max_beta`.
pub fn verify_phi<T: Coefficient>(max_beta: usize) -> VerificationSummary {
    let started = Instant::now();
    let recursive = phi_recursive_table::<T>(max_beta);
    let cases = recursive
        .into_par_iter()
        .enumerate()
        .map(|(beta, rec)| (format!("φ_{beta}"), rec == phi_closed::<T>(beta)))
        .collect();
    VerificationSummary::from_cases("phi", started, cases)
}

/// `(1+q) [2i+1]_{q²} = [4i+2]_q` for `i = 1..=max_i`.
pub fn verify_identity_4i2<T: Coefficient>(max_i: usize) -> VerificationSummary {
    let started = Instant::now();
    let one_plus_q = Polynomial::<T>::from_i64s(&[1, 1]);
    let cases = (1..=max_i)
        .map(|i| {
            let lhs = &one_plus_q * &q_int::<T>(2 * i + 1, 2);
            let rhs = q_int::<T>(4 * i + 2, 1);
            (format!("i={i}"), lhs == rhs && lhs.degree() == Some(4 * i + 1))
        })
        .collect();
    VerificationSummary::from_cases("identity", started, cases)
}

/// Gaussian binomials `[n choose k]_q` for `n <= max_n`, from Pascal's rule
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Row `n` has `n + 1` entries.
pub fn gaussian_binomial_rows<T: Coefficient>(max_n: usize, base: usize) -> Vec<Vec<Polynomial<T>>> {
    let mut rows: Vec<Vec<Polynomial<T>>> = vec![vec![Polynomial::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k >= 1 {
                    prev[k - 1].clone()
                } else {
                    Polynomial::zero()
                };
                let right = if k < n {
                    prev[k].shift(k * base)
                } else {
                    Polynomial::zero()
                };
                &left + &right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// q-multinomials `[α+β+γ; α, β, γ]` in base `q^base` from the recursion
/// `M(α,β,γ) = M(α-1,β,γ) + Q^α M(α,β-1,γ) + Q^{α+β} M(α,β,γ-1)`,
/// `Q = q^base`, `M(0,0,0) = 1`.
pub struct MultinomialOracle<T> {
    base: usize,
    cache: HashMap<(usize, usize, usize), Polynomial<T>>,
}

impl<T: Coefficient> MultinomialOracle<T> {
    pub fn new(base: usize) -> Self {
        MultinomialOracle {
            base,
            cache: HashMap::new(),
        }
    }

    pub fn get(&mut self, alpha: usize, beta: usize, gamma: usize) -> Polynomial<T> {
        if let Some(v) = self.cache.get(&(alpha, beta, gamma)) {
            return v.clone();
        }
        let v = if alpha + beta + gamma == 0 {
            Polynomial::one()
        } else {
            let mut acc = Polynomial::zero();
            if alpha > 0 {
                acc = &acc + &self.get(alpha - 1, beta, gamma);
            }
            if beta > 0 {
                acc = &acc + &self.get(alpha, beta - 1, gamma).shift(self.base * alpha);
            }
            if gamma > 0 {
                acc = &acc + &self.get(alpha, beta, gamma - 1).shift(self.base * (alpha + beta));
            }
            acc
        };
        self.cache.insert((alpha, beta, gamma), v.clone());
        v
    }
}

/// `(a+b)^n` with `ab = q ba` against Gaussian binomials, `n = 1..=bound`.
pub fn verify_q_binomial<T: Coefficient>(bound: usize) -> VerificationSummary {
    let started = Instant::now();
    let sys = SystemId::AC0;
    let rows = gaussian_binomial_rows::<T>(bound, 1);
    let powers = oracle_powers(&RelationSystem::<T>::new(sys), bound);
    let mut cases = Vec::new();
    for (idx, expansion) in powers.iter().enumerate() {
        let n = idx + 1;
        let expected = FreePoly::from_terms(
            (0..=n).map(|k| (normal_word(sys, k, 0, n - k), RatFunc::from_poly(rows[n][k].clone()))),
        );
        cases.push((format!("A-c0 n={n}"), expansion == &expected));
    }
    VerificationSummary::from_cases("degenerations-A-c0", started, cases)
}

/// `(a+b+c)^n` with `ξ = 0` against q²-multinomials, `n = 1..=bound`.
pub fn verify_q_multinomial<T: Coefficient>(bound: usize) -> VerificationSummary {
    let started = Instant::now();
    let sys = SystemId::BXi0;
    let mut oracle = MultinomialOracle::<T>::new(2);
    let powers = oracle_powers(&RelationSystem::<T>::new(sys), bound);
    let mut cases = Vec::new();
    for (idx, expansion) in powers.iter().enumerate() {
        let n = idx + 1;
        let expected = FreePoly::from_terms(
            index_triples(sys, n)
                .into_iter()
                .map(|(al, be, ga)| (normal_word(sys, al, be, ga), RatFunc::from_poly(oracle.get(al, be, ga)))),
        );
        cases.push((format!("B-xi0 n={n}"), expansion == &expected));
    }
    VerificationSummary::from_cases("degenerations-B-xi0", started, cases)
}

/// Both degenerations with the same bound.
pub fn verify_degenerations<T: Coefficient>(bound: usize) -> VerificationSummary {
    let parts = [verify_q_binomial::<T>(bound), verify_q_multinomial::<T>(bound)];
    VerificationSummary::combine("degenerations", &parts)
}

/// The commutation identities used inside the proofs, checked by normal
/// ordering:
///
/// * `a^n b = q^n b a^n + q^{n-1} [n]_q c a^{n-1}` (System A);
/// * `a^n c = q^{2n} c a^n + ξ q^{2(n-1)} [n]_{q²} b² a^{n-1}` (System B);
///
/// for `n = 1..=max_n`.
pub fn verify_auxiliary<T: Coefficient>(max_n: usize) -> VerificationSummary {
    use Generator::{A, B, C};
    let started = Instant::now();
    let sys_a = RelationSystem::<T>::new(SystemId::A);
    let sys_b = RelationSystem::<T>::new(SystemId::B);
    let qint = |n: usize, base: usize| RatFunc::from_poly(q_int::<T>(n, base));
    let mut cases = Vec::new();
    for n in 1..=max_n {
        let lhs = sys_a.normalize_word(&Word::from_powers(&[(A, n), (B, 1)]));
        let rhs = FreePoly::from_terms([
            (Word::from_powers(&[(B, 1), (A, n)]), RatFunc::q_pow(n)),
            (
                Word::from_powers(&[(C, 1), (A, n - 1)]),
                &RatFunc::q_pow(n - 1) * &qint(n, 1),
            ),
        ]);
        cases.push((format!("a^{n} b (A)"), lhs == rhs));

        let lhs = sys_b.normalize_word(&Word::from_powers(&[(A, n), (C, 1)]));
        let rhs = FreePoly::from_terms([
            (Word::from_powers(&[(C, 1), (A, n)]), RatFunc::q_pow(2 * n)),
            (
                Word::from_powers(&[(B, 2), (A, n - 1)]),
                &(&xi() * &RatFunc::q_pow(2 * (n - 1))) * &qint(n, 2),
            ),
        ]);
        cases.push((format!("a^{n} c (B)"), lhs == rhs));
    }
    VerificationSummary::from_cases("auxiliary", started, cases)
}

/// The mixed-word relations for every `α, β, γ <= max_exp`:
///
/// * A: `b^α c^β a^γ · b = q^{γ+2β} b^{α+1} c^β a^γ + q^{γ-1}[γ]_q b^α c^{β+1} a^{γ-1}`;
/// * B: `c^α b^β a^γ · b = q^{2γ} c^α b^{β+1} a^γ`;
/// * B: `c^α b^β a^γ · c = q^{2γ+2β} c^{α+1} b^β a^γ + ξ q^{2(γ-1)}[γ]_{q²} c^α b^{β+2} a^{γ-1}`.
///
/// Terms with `γ = 0` vanish through the `[0] = 0` factor.
pub fn verify_mixed_words<T: Coefficient>(max_exp: usize) -> VerificationSummary {
    use Generator::{B, C};
    let started = Instant::now();
    let sys_a = RelationSystem::<T>::new(SystemId::A);
    let sys_b = RelationSystem::<T>::new(SystemId::B);
    let qint = |n: usize, base: usize| RatFunc::from_poly(q_int::<T>(n, base));
    let mut cases = Vec::new();
    for al in 0..=max_exp {
        for be in 0..=max_exp {
            for ga in 0..=max_exp {
                let tail = |p: Vec<(Word, RatFunc<T>)>| FreePoly::from_terms(p);

                let w = normal_word(SystemId::A, al, be, ga).concat(&Word::single(B));
                let mut expected = vec![(normal_word(SystemId::A, al + 1, be, ga), RatFunc::q_pow(ga + 2 * be))];
                if ga >= 1 {
                    expected.push((
                        normal_word(SystemId::A, al, be + 1, ga - 1),
                        &RatFunc::q_pow(ga - 1) * &qint(ga, 1),
                    ));
                }
                cases.push((
                    format!("A: b^{al} c^{be} a^{ga} · b"),
                    sys_a.normalize_word(&w) == tail(expected),
                ));

                let w = normal_word(SystemId::B, al, be, ga).concat(&Word::single(B));
                let expected = vec![(normal_word(SystemId::B, al, be + 1, ga), RatFunc::q_pow(2 * ga))];
                cases.push((
                    format!("B: c^{al} b^{be} a^{ga} · b"),
                    sys_b.normalize_word(&w) == tail(expected),
                ));

                let w = normal_word(SystemId::B, al, be, ga).concat(&Word::single(C));
                let mut expected = vec![(
                    normal_word(SystemId::B, al + 1, be, ga),
                    RatFunc::q_pow(2 * ga + 2 * be),
                )];
                if ga >= 1 {
                    expected.push((
                        normal_word(SystemId::B, al, be + 2, ga - 1),
                        &(&xi() * &RatFunc::q_pow(2 * (ga - 1))) * &qint(ga, 2),
                    ));
                }
                cases.push((
                    format!("B: c^{al} b^{be} a^{ga} · c"),
                    sys_b.normalize_word(&w) == tail(expected),
                ));
            }
        }
    }
    VerificationSummary::from_cases("mixed-words", started, cases)
}

/// Uniform random word over `{a, b, c}` of length `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| Generator::ALL[rng.gen_range(0..3)]).collect())
}

/// Normalises `count` seeded random words with the leftmost strategy and with
/// a random-position strategy, and compares the results.
pub fn verify_confluence<T: Coefficient>(
    sys: SystemId,
    count: usize,
    max_len: usize,
    seed: u64,
) -> VerificationSummary {
    let started = Instant::now();
    let rel = RelationSystem::<T>::new(sys);
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let words: Vec<Word> = (0..count).map(|_| random_word(&mut rng, max_len)).collect();
    let cases = words
        .into_par_iter()
        .enumerate()
        .map(|(k, w)| {
            let p = FreePoly::word(w.clone());
            let left = rel.normalize_with(&p, &mut Leftmost);
            let mut random = RandomPosition(rand::rngs::StdRng::seed_from_u64(seed ^ (k as u64 + 1)));
            let other = rel.normalize_with(&p, &mut random);
            let ok = left == other && left.words().all(|v| rel.is_normal(v));
            (format!("{sys} word \"{w}\""), ok)
        })
        .collect();
    VerificationSummary::from_cases(format!("confluence-{sys}"), started, cases)
}

/// Checks that every word of an expansion is normal and of degree `n`.
pub fn support_is_graded<T: Coefficient>(sys: SystemId, n: usize, p: &FreePoly<T>) -> bool {
    p.words()
        .all(|w| normal_exponents(sys, w).is_some_and(|e| expansion_degree(sys, e) == n))
}

/// Value of a coefficient at a point, or the raw parts at a pole.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EvalOutcome {
    Value {
        #[serde(serialize_with = "ser_complex")]
        value: Complex64,
    },
    Pole {
        #[serde(serialize_with = "ser_complex")]
        num: Complex64,
        #[serde(serialize_with = "ser_complex")]
        den: Complex64,
    },
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

/// `sign · exp(2πi/N)`.
pub fn root_of_unity<F: EvalFloat>(order: u32, negate: bool) -> Complex<F> {
    let angle = F::TAU() / F::from(order).expect("order fits the float type");
    let z = Complex::from_polar(F::one(), angle);
    if negate {
        -z
    } else {
        z
    }
}

/// Evaluates every coefficient at `at`; poles are reported, not raised.
pub fn eval_terms<T: Coefficient, F: EvalFloat>(p: &FreePoly<T>, at: Complex<F>) -> Vec<(Word, EvalOutcome)> {
    p.terms()
        .map(|(w, c)| {
            let outcome = match c.eval(at) {
                Ok(v) => EvalOutcome::Value {
                    value: Complex64::new(v.re.to_f64().unwrap_or(f64::NAN), v.im.to_f64().unwrap_or(f64::NAN)),
                },
                Err(Error::Pole { num, den }) => EvalOutcome::Pole { num, den },
                Err(e) => unreachable!("evaluation only fails at poles: {e}"),
            };
            (w.clone(), outcome)
        })
        .collect()
}

/// Evaluates every coefficient at `q = ±exp(2πi/N)`, `N >= 3`.
pub fn eval_at_root<T: Coefficient>(p: &FreePoly<T>, order: u32, negate: bool) -> Vec<(Word, EvalOutcome)> {
    assert!(order >= 3, "N must be >= 3");
    eval_terms(p, root_of_unity::<f64>(order, negate))
}

/// Named suites run by the command-line front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Phi,
    Recurrences,
    Degenerations,
    Identity,
    Auxiliary,
    Confluence,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "lemma1",
        "lemma2",
        "phi",
        "recurrences",
        "degenerations",
        "identity",
        "auxiliary",
        "confluence",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "lemma1" => Suite::Lemma1,
            "lemma2" => Suite::Lemma2,
            "phi" => Suite::Phi,
            "recurrences" => Suite::Recurrences,
            "degenerations" => Suite::Degenerations,
            "identity" => Suite::Identity,
            "auxiliary" => Suite::Auxiliary,
            "confluence" => Suite::Confluence,
            "all" => Suite::All,
            _ => {
                return Err(format!(
                    "unknown suite '{s}' (expected one of {})",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

/// Size parameters for [`run_suite`]. `None` selects the default bound.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub bound: Option<usize>,
    pub max_beta: Option<usize>,
    pub max_i: Option<usize>,
}

pub const DEFAULT_MAX_N_A: usize = 8;
pub const DEFAULT_MAX_N_B: usize = 6;
pub const DEFAULT_MAX_BETA: usize = 40;
pub const DEFAULT_RECURRENCE_BOUND_A: usize = 10;
pub const DEFAULT_RECURRENCE_BOUND_B: usize = 8;
pub const DEFAULT_DEGENERATION_BOUND_A: usize = 12;
pub const DEFAULT_DEGENERATION_BOUND_B: usize = 8;
pub const DEFAULT_MAX_I: usize = 20;
pub const DEFAULT_AUXILIARY_MAX_N: usize = 10;
pub const DEFAULT_MIXED_MAX_EXP: usize = 3;
pub const CONFLUENCE_WORDS: usize = 1000;
pub const CONFLUENCE_MAX_LEN: usize = 8;
pub const CONFLUENCE_SEED: u64 = 0x5eed_0001;

/// What a suite produced: expansion reports (lemma suites only) and one
/// summary per component check.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "T: Coefficient")]
pub struct SuiteResult<T> {
    pub summaries: Vec<VerificationSummary>,
    pub reports: Vec<ExpansionReport<T>>,
}

impl<T: Coefficient> SuiteResult<T> {
    pub fn failures(&self) -> usize {
        self.summaries.iter().map(|s| s.failures).sum()
    }
}

pub fn run_suite<T: Coefficient>(suite: Suite, params: &SuiteParams) -> SuiteResult<T> {
    let mut out = SuiteResult {
        summaries: Vec::new(),
        reports: Vec::new(),
    };
    let lemma = |name: &str, sys: SystemId, default: usize, out: &mut SuiteResult<T>| {
        let reports = verify_expansions::<T>(sys, params.max_n.unwrap_or(default));
        out.summaries.push(summarize_reports(name, &reports));
        out.reports.extend(reports);
    };
    match suite {
        Suite::Lemma1 => lemma("lemma1", SystemId::A, DEFAULT_MAX_N_A, &mut out),
        Suite::Lemma2 => lemma("lemma2", SystemId::B, DEFAULT_MAX_N_B, &mut out),
        Suite::Phi => out
            .summaries
            .push(verify_phi::<T>(params.max_beta.unwrap_or(DEFAULT_MAX_BETA))),
        Suite::Recurrences => {
            let a = verify_recurrences::<T>(SystemId::A, params.bound.unwrap_or(DEFAULT_RECURRENCE_BOUND_A));
            let b = verify_recurrences::<T>(SystemId::B, params.bound.unwrap_or(DEFAULT_RECURRENCE_BOUND_B));
            out.summaries.push(VerificationSummary::combine("recurrences", &[a, b]));
        }
        Suite::Degenerations => {
            let a = verify_q_binomial::<T>(params.bound.unwrap_or(DEFAULT_DEGENERATION_BOUND_A));
            let b = verify_q_multinomial::<T>(params.bound.unwrap_or(DEFAULT_DEGENERATION_BOUND_B));
            out.summaries
                .push(VerificationSummary::combine("degenerations", &[a, b]));
        }
        Suite::Identity => out
            .summaries
            .push(verify_identity_4i2::<T>(params.max_i.unwrap_or(DEFAULT_MAX_I))),
        Suite::Auxiliary => {
            let aux = verify_auxiliary::<T>(params.max_n.unwrap_or(DEFAULT_AUXILIARY_MAX_N));
            let mixed = verify_mixed_words::<T>(params.bound.unwrap_or(DEFAULT_MIXED_MAX_EXP));
            out.summaries
                .push(VerificationSummary::combine("auxiliary", &[aux, mixed]));
        }
        Suite::Confluence => {
            let parts: Vec<_> = [SystemId::A, SystemId::B]
                .into_iter()
                .map(|sys| verify_confluence::<T>(sys, CONFLUENCE_WORDS, CONFLUENCE_MAX_LEN, CONFLUENCE_SEED))
                .collect();
            out.summaries.push(VerificationSummary::combine("confluence", &parts));
        }
        Suite::All => {
            for s in [
                Suite::Lemma1,
                Suite::Lemma2,
                Suite::Phi,
                Suite::Recurrences,
                Suite::Degenerations,
                Suite::Identity,
                Suite::Auxiliary,
                Suite::Confluence,
            ] {
                let part = run_suite::<T>(s, params);
                out.summaries.extend(part.summaries);
                out.reports.extend(part.reports);
            }
        }
    }
    out
}
