//! `qbinom`: exact q-binomial expansions in noncommuting variables.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use qbinom::ncpoly::render_terms;
use qbinom::qcomb::{phi_closed, phi_recursive, q_factorial, q_int};
use qbinom::verify::{self, EvalOutcome, Suite, SuiteParams};
use qbinom::{NcPolynomial, Relations, SystemId, Word};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qbinom",
    version,
    about = "Exact q-binomial expansions in noncommuting variables"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// q-integer [n] in base q^base.
    Qint {
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = positive, allow_negative_numbers = true)]
        base: usize,
    },
    /// q-factorial [n]! in base q^base.
    Qfact {
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = positive, allow_negative_numbers = true)]
        base: usize,
    },
    /// Closed-form coefficient of a normal-ordered word.
    Coeff {
        #[arg(long, value_parser = system)]
        system: SystemId,
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        alpha: usize,
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        beta: usize,
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        gamma: usize,
    },
    /// Correction factor phi_beta.
    Phi {
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        beta: usize,
        #[arg(long, value_enum, default_value_t = Route::Closed)]
        route: Route,
    },
    /// Normal-ordered expansion of the n-th power of the generator sum.
    Expand {
        #[arg(long, value_parser = system)]
        system: SystemId,
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Normal form of a word over a, b, c.
    Normalize {
        #[arg(long, value_parser = system)]
        system: SystemId,
        #[arg(long, value_parser = word, allow_hyphen_values = true)]
        word: Word,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = suite)]
        suite: Suite,
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        max_n: Option<usize>,
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        bound: Option<usize>,
        #[arg(long, value_parser = index, allow_negative_numbers = true)]
        max_beta: Option<usize>,
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        max_i: Option<usize>,
    },
    /// Evaluate expansion coefficients at q = ±exp(2πi/N).
    Eval {
        #[arg(long, value_parser = system)]
        system: SystemId,
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        n: usize,
        #[arg(long, value_parser = root_order, allow_negative_numbers = true)]
        at_root: u32,
        #[arg(long, value_enum, default_value_t = Sign::Plus)]
        sign: Sign,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Closed,
    Recursive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Formula,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Sign {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

fn integer(s: &str) -> Result<i64, String> {
    s.parse().map_err(|_| format!("'{s}' is not an integer"))
}

fn index(s: &str) -> Result<usize, String> {
    let v = integer(s)?;
    usize::try_from(v).map_err(|_| "must be ≥ 0".to_string())
}

fn positive(s: &str) -> Result<usize, String> {
    match integer(s)? {
        v if v >= 1 => Ok(v as usize),
        _ => Err("must be ≥ 1".to_string()),
    }
}

fn root_order(s: &str) -> Result<u32, String> {
    match integer(s)? {
        v if v < 3 => Err("N must be ≥ 3".to_string()),
        v => u32::try_from(v).map_err(|_| "N is too large".to_string()),
    }
}

fn system(s: &str) -> Result<SystemId, String> {
    s.parse()
}

fn suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: qbinom::Error| e.to_string())
}

/// Terms ordered by the system's normal rank, letter by letter, so the
/// normal words read `b^2, b·a, c, a^2` rather than by length.
fn render_ordered(sys: SystemId, p: &NcPolynomial) -> String {
    let rank = sys.normal_rank();
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|(w, _)| w.letters().iter().map(|g| rank[g.index()]).collect::<Vec<_>>());
    let mut out = String::new();
    render_terms(&mut out, terms.into_iter()).expect("writing to a String");
    out
}

#[derive(Serialize)]
struct EvalRow {
    word: Word,
    #[serde(flatten)]
    outcome: EvalOutcome,
}

fn complex_text(z: Complex64) -> String {
    // adding zero turns -0.0 into 0.0
    format!("{:.12}{:+.12}i", z.re + 0.0, z.im + 0.0)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

fn expansion(sys: SystemId, n: usize, method: Method) -> NcPolynomial {
    match method {
        Method::Formula => verify::expand_formula(sys, n),
        Method::Oracle => verify::expand_oracle(sys, n),
    }
}

fn run(cli: Cli) -> (String, u8) {
    let fmt = cli.format;
    let text = fmt == Format::Text;
    match cli.command {
        Command::Qint { n, base } => {
            let p = q_int::<qbinom::BigInt>(n, base);
            (if text { p.to_string() } else { json(&p) }, 0)
        }
        Command::Qfact { n, base } => {
            let p = q_factorial::<qbinom::BigInt>(n, base);
            (if text { p.to_string() } else { json(&p) }, 0)
        }
        Command::Coeff {
            system,
            alpha,
            beta,
            gamma,
        } => {
            let c: qbinom::RationalFunction = verify::coefficient(system, alpha, beta, gamma);
            (if text { c.to_string() } else { json(&c) }, 0)
        }
        Command::Phi { beta, route } => {
            let c: qbinom::RationalFunction = match route {
                Route::Closed => phi_closed(beta),
                Route::Recursive => phi_recursive(beta),
            };
            (if text { c.to_string() } else { json(&c) }, 0)
        }
        Command::Expand { system, n, method } => {
            let p = expansion(system, n, method);
            (if text { render_ordered(system, &p) } else { json(&p) }, 0)
        }
        Command::Normalize { system, word } => {
            let p = Relations::new(system).normalize_word(&word);
            (if text { render_ordered(system, &p) } else { json(&p) }, 0)
        }
        Command::Verify {
            suite,
            max_n,
            bound,
            max_beta,
            max_i,
        } => {
            let params = SuiteParams {
                max_n,
                bound,
                max_beta,
                max_i,
            };
            let result = verify::run_suite::<qbinom::BigInt>(suite, &params);
            let code = if result.failures() == 0 { 0 } else { EXIT_VERIFY_FAILED };
            let out = if text {
                let mut out = String::new();
                for s in &result.summaries {
                    let _ = writeln!(out, "{s}");
                    for case in &s.failed_cases {
                        let _ = writeln!(out, "  failed: {case}");
                    }
                }
                out.trim_end().to_string()
            } else {
                json(&result)
            };
            (out, code)
        }
        Command::Eval {
            system,
            n,
            at_root,
            sign,
            method,
        } => {
            let p = expansion(system, n, method);
            let rows = verify::eval_at_root(&p, at_root, sign == Sign::Minus);
            let out = if text {
                let rank = system.normal_rank();
                let mut rows = rows;
                rows.sort_by_key(|(w, _)| w.letters().iter().map(|g| rank[g.index()]).collect::<Vec<_>>());
                let width = rows
                    .iter()
                    .map(|(w, _)| w.to_power_string().chars().count())
                    .max()
                    .unwrap_or(0);
                let mut out = String::new();
                for (w, outcome) in &rows {
                    let value = match outcome {
                        EvalOutcome::Value { value } => complex_text(*value),
                        EvalOutcome::Pole { num, den } => {
                            format!("pole (num {}, den {})", complex_text(*num), complex_text(*den))
                        }
                    };
                    let _ = writeln!(out, "{:<width$}  {value}", w.to_power_string());
                }
                out.trim_end().to_string()
            } else {
                let rows: Vec<EvalRow> = rows
                    .into_iter()
                    .map(|(word, outcome)| EvalRow { word, outcome })
                    .collect();
                json(&rows)
            };
            (out, 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap's first line names the flag; the usage block is noise here
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("usage error");
            eprintln!("{line}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let (out, code) = run(cli);
    println!("{out}");
    ExitCode::from(code)
}
