//! Command-line surface: `formula`, `eval`, `matrix`, `genfun`, `bench` and
//! `selftest` subcommands over the library pipeline.
//!
//! Exit codes: 0 success, 1 usage error, 2 order-cap guard, 3 verification
//! failure. All non-bench output is deterministic; bench timings live under
//! a dedicated `timing` key so the rest of the report can be compared
//! byte-for-byte between runs.

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closedform::{
    faulhaber_via_bernoulli, naive_power_sum, power_sum_formula, PowerSumFormula,
};
use crate::error::{Error, Result};
use crate::exact::{BigInt, BigRational, RatPoly};
use crate::genfun::{power_genfun, GenFunJson};
use crate::genmatrix::{self, InvPermMatrix, PermMatrix};
use crate::render;
use crate::selftest::{self, SuiteStatus};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_GUARD: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

/// Largest n for which `eval --verify` is willing to run the brute-force
/// summation.
const VERIFY_LIMIT: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "powersum",
    version,
    about = "Exact closed-form polynomials for power sums of natural numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest matrix order any command may build.
    #[arg(
        long,
        global = true,
        env = "POWERSUM_MAX_ORDER_CAP",
        default_value_t = genmatrix::DEFAULT_ORDER_CAP
    )]
    max_order_cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed form of sum_{k=1}^n k^t as a polynomial in n.
    Formula {
        /// Power t >= 0.
        t: usize,
    },
    /// Evaluate the closed form exactly at an integer point.
    #[command(allow_negative_numbers = true)]
    Eval {
        /// Power t >= 0.
        t: usize,
        /// Evaluation point n >= 0 (arbitrary size).
        #[arg(value_parser = parse_bigint)]
        n: BigInt,
        /// Cross-check against brute-force summation (n <= 10^6).
        #[arg(long)]
        verify: bool,
    },
    /// Print the generation matrix of a given order.
    Matrix {
        /// Matrix order n >= 1.
        n: usize,
        /// Print the inverse matrix instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Print G{k^t} and the generating function of its prefix sums.
    Genfun {
        /// Power t >= 1.
        t: usize,
    },
    /// Time each derivation method and cross-check their results.
    Bench {
        /// Power t >= 1.
        t: usize,
        /// Evaluation point.
        n: u64,
        /// Methods to run.
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_values_t = [Method::MatrixPipeline, Method::Bernoulli, Method::NaiveEval]
        )]
        methods: Vec<Method>,
        /// Timed repetitions per method (median is reported).
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
    /// Run every invariant suite up to a power bound.
    Selftest {
        /// Largest power exercised by the suites.
        #[arg(long, default_value_t = 12)]
        max_power: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    MatrixPipeline,
    Bernoulli,
    NaiveEval,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::MatrixPipeline => "matrix-pipeline",
            Method::Bernoulli => "bernoulli",
            Method::NaiveEval => "naive-eval",
        }
    }
}

fn parse_bigint(s: &str) -> std::result::Result<BigInt, String> {
    s.parse::<BigInt>().map_err(|_| format!("{s:?} is not an integer"))
}

/// Parses `std::env::args`, executes, prints, and returns the exit code.
pub fn run() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            output.code
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::OrderCapExceeded { .. } => EXIT_GUARD,
        Error::VerificationFailed(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug)]
struct CommandOutput {
    stdout: String,
    code: u8,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { stdout, code: EXIT_OK }
    }
}

fn execute(cli: &Cli) -> Result<CommandOutput> {
    let cap = cli.max_order_cap;
    match &cli.command {
        Command::Formula { t } => cmd_formula(*t, cli.format, cap),
        Command::Eval { t, n, verify } => cmd_eval(*t, n, *verify, cli.format, cap),
        Command::Matrix { n, inverse } => cmd_matrix(*n, *inverse, cli.format, cap),
        Command::Genfun { t } => cmd_genfun(*t, cli.format, cap),
        Command::Bench { t, n, methods, repeats } => cmd_bench(*t, *n, methods, *repeats, cap),
        Command::Selftest { max_power } => cmd_selftest(*max_power),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    text.push('\n');
    text
}

/// The matrix pipeline covers t >= 1; the sum of t = 0 powers is just n.
fn formula_for(t: usize, cap: usize) -> Result<PowerSumFormula> {
    if t == 0 {
        let polynomial =
            RatPoly::from_coeffs(vec![BigRational::zero(), BigRational::from_integer(1.into())]);
        return Ok(PowerSumFormula::new(0, polynomial));
    }
    genmatrix::check_order_cap(t, cap)?;
    power_sum_formula(t, None)
}

fn cmd_formula(t: usize, format: Format, cap: usize) -> Result<CommandOutput> {
    let formula = formula_for(t, cap)?;
    let stdout = match format {
        Format::Text => format!("{}\n", render::poly_text(formula.polynomial())),
        Format::Latex => format!("{}\n", render::poly_latex(formula.polynomial())),
        Format::Json => pretty(&formula.to_json()),
    };
    Ok(CommandOutput::ok(stdout))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalJson {
    pub power: usize,
    pub n: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<String>,
}

fn cmd_eval(t: usize, n: &BigInt, verify: bool, format: Format, cap: usize) -> Result<CommandOutput> {
    let formula = formula_for(t, cap)?;
    let value = formula.eval(n)?;

    let verification = if verify {
        match u64::try_from(n.clone()).ok().filter(|small| *small <= VERIFY_LIMIT) {
            Some(small) => {
                let direct = naive_power_sum(t, small);
                if direct != value {
                    return Err(Error::VerificationFailed(format!(
                        "closed form gives {value} but direct summation gives {direct} at t = {t}, n = {n}"
                    )));
                }
                Some("match".to_owned())
            }
            None => Some(format!("skipped (n exceeds {VERIFY_LIMIT})")),
        }
    } else {
        None
    };

    let stdout = match format {
        Format::Text | Format::Latex => {
            let mut text = format!("{value}\n");
            if let Some(v) = &verification {
                text.push_str(&format!("verify: {v}\n"));
            }
            text
        }
        Format::Json => pretty(&EvalJson {
            power: t,
            n: n.to_string(),
            value: value.to_string(),
            verification,
        }),
    };
    Ok(CommandOutput::ok(stdout))
}

fn cmd_matrix(n: usize, inverse: bool, format: Format, cap: usize) -> Result<CommandOutput> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    genmatrix::check_order_cap(n, cap)?;
    let (rows, json) = if inverse {
        let m = InvPermMatrix::build(n)?;
        (m.rows(), m.to_json())
    } else {
        let m = PermMatrix::build(n)?;
        (m.rows(), m.to_json())
    };
    let stdout = match format {
        Format::Text => format!("{}\n", render::matrix_grid(&rows)),
        Format::Latex => format!("{}\n", render::matrix_latex(&rows)),
        Format::Json => pretty(&json),
    };
    Ok(CommandOutput::ok(stdout))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenfunCmdJson {
    pub power: usize,
    pub power_genfun: GenFunJson,
    pub prefix_genfun: GenFunJson,
}

fn cmd_genfun(t: usize, format: Format, cap: usize) -> Result<CommandOutput> {
    if t == 0 {
        return Err(Error::UnsupportedPower);
    }
    genmatrix::check_order_cap(t, cap)?;
    let inv = InvPermMatrix::build(t)?;
    let power = power_genfun(t, &inv)?;
    let prefix = power.prefix_sum();
    let stdout = match format {
        Format::Text => format!(
            "G{{k^{t}}} = {}\nG{{sum k^{t}}} = {}\n",
            render::genfun_text(&power),
            render::genfun_text(&prefix)
        ),
        Format::Latex => {
            format!("{}\n{}\n", render::genfun_latex(&power), render::genfun_latex(&prefix))
        }
        Format::Json => pretty(&GenfunCmdJson {
            power: t,
            power_genfun: power.to_json(),
            prefix_genfun: prefix.to_json(),
        }),
    };
    Ok(CommandOutput::ok(stdout))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub method: String,
    pub power: usize,
    pub n: String,
    pub digest: ResultDigest,
    pub timing: BenchTiming,
}

/// Head/tail digits plus digit count of the exact result. Full equality is
/// asserted across methods before the digest is formed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDigest {
    pub head: String,
    pub tail: String,
    pub digits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchTiming {
    pub median_ns: u64,
    pub repeats: usize,
}

fn digest_of(value: &BigInt) -> ResultDigest {
    let digits = value.to_string();
    let take = digits.len().min(8);
    ResultDigest {
        head: digits[..take].to_owned(),
        tail: digits[digits.len() - take..].to_owned(),
        digits: digits.len(),
    }
}

fn median_ns(mut samples: Vec<u64>) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

fn run_method(method: Method, t: usize, n: u64) -> Result<BigInt> {
    match method {
        Method::MatrixPipeline => power_sum_formula(t, None)?.eval(&BigInt::from(n)),
        Method::Bernoulli => faulhaber_via_bernoulli(t)?.eval(&BigInt::from(n)),
        Method::NaiveEval => Ok(naive_power_sum(t, n)),
    }
}

fn cmd_bench(t: usize, n: u64, methods: &[Method], repeats: usize, cap: usize) -> Result<CommandOutput> {
    if repeats == 0 {
        return Err(Error::Usage("bench needs --repeats >= 1".into()));
    }
    if t == 0 {
        return Err(Error::Usage("bench needs a power t >= 1".into()));
    }
    if methods.is_empty() {
        return Err(Error::Usage("bench needs at least one method".into()));
    }
    genmatrix::check_order_cap(t, cap)?;

    let mut results: Vec<(Method, BigInt, u64)> = Vec::new();
    for &method in methods {
        let mut samples = Vec::with_capacity(repeats);
        let mut value = BigInt::zero();
        for _ in 0..repeats {
            let start = Instant::now();
            value = run_method(method, t, n)?;
            samples.push(start.elapsed().as_nanos().min(u64::MAX as u128) as u64);
        }
        results.push((method, value, median_ns(samples)));
    }

    let reference = &results[0].1;
    for (method, value, _) in &results {
        if value != reference {
            return Err(Error::VerificationFailed(format!(
                "method {} returned {value}, expected {reference}",
                method.name()
            )));
        }
    }

    let reports: Vec<BenchReport> = results
        .iter()
        .map(|(method, value, median)| BenchReport {
            method: method.name().to_owned(),
            power: t,
            n: n.to_string(),
            digest: digest_of(value),
            timing: BenchTiming { median_ns: *median, repeats },
        })
        .collect();
    Ok(CommandOutput::ok(pretty(&reports)))
}

fn cmd_selftest(max_power: usize) -> Result<CommandOutput> {
    if max_power == 0 {
        return Err(Error::Usage("selftest needs --max-power >= 1".into()));
    }
    let outcomes = selftest::run(max_power);
    let mut stdout = String::new();
    let mut passed = 0usize;
    let mut failed = 0usize;
    let mut skipped = 0usize;
    for outcome in &outcomes {
        match outcome.status {
            SuiteStatus::Pass => {
                passed += 1;
                stdout.push_str(&format!("ok {}\n", outcome.name));
            }
            SuiteStatus::Fail => {
                failed += 1;
                stdout.push_str(&format!("FAIL {}: {}\n", outcome.name, outcome.detail));
            }
            SuiteStatus::Skip => {
                skipped += 1;
                stdout.push_str(&format!("skip {} ({})\n", outcome.name, outcome.detail));
            }
        }
    }
    stdout.push_str(&format!(
        "selftest: {passed} passed, {failed} failed, {skipped} skipped (max power {max_power})\n"
    ));
    let code = if failed > 0 { EXIT_VERIFY } else { EXIT_OK };
    Ok(CommandOutput { stdout, code })
}
