//! Command-line front end: `closure`, `member` and `verify`.
//!
//! Exit status: 0 on success (and for members), 1 for a non-member or a
//! verification mismatch, 2 for usage errors, 3 for domain and resource errors.

use std::ffi::OsString;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::closure::{construct, Case, Construction, ExponentSet};
use crate::error::Error;
use crate::interval::{Base, DigitInterval, Exponent};
use crate::oracle::{compare, index_closure, integer_closure, MAX_INTEGER_BOUND};
use crate::semigroup::DcSemigroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Largest `--max-exp` accepted by `verify` (2^(max+1) exponent subsets per base).
pub const MAX_SWEEP_EXPONENT: Exponent = 16;

const CONVENTION: &str = "\
Notation: I_b(s,l) is the set of integers with between s+1 and s+l base-b digits,
i.e. [b^s, b^(s+l)). I_b(t,+inf) is [b^t, +inf) and N* is every positive integer.
Input numbers are always written in decimal; --base only sets how digits are counted.";

#[derive(Debug, Parser)]
#[command(
    name = "digitclosed",
    version,
    about = "Smallest multiplicative semigroups closed under the number of base-b digits",
    after_help = CONVENTION
)]
pub struct Cli {
    /// Use "U" instead of "∪" in text output.
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the smallest digit-closed semigroup containing the given integers.
    #[command(after_help = CONVENTION)]
    Closure {
        #[command(flatten)]
        input: SemigroupInput,
        /// Emit the machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Test whether QUERY lies in the semigroup generated by the given integers.
    #[command(after_help = CONVENTION)]
    Member {
        #[arg(long, value_parser = parse_base)]
        base: Base,
        #[arg(value_parser = parse_decimal)]
        query: BigUint,
        #[arg(value_parser = parse_decimal)]
        elements: Vec<BigUint>,
        #[arg(long)]
        json: bool,
    },
    /// Compare the construction against the brute-force closures on every
    /// non-empty exponent set below --max-exp.
    Verify {
        /// Inclusive base range, e.g. 2..5.
        #[arg(long, default_value = "2..5")]
        bases: BaseRange,
        /// Exponent sets range over subsets of {0, ..., MAX_EXP}.
        #[arg(long, default_value_t = 6)]
        max_exp: Exponent,
        /// Exponents are compared below this bound.
        #[arg(long, default_value_t = 60, value_parser = parse_bound)]
        bound: Exponent,
        /// Also run the integer-level closure for bases 2 and 3 (bound <= 12).
        #[arg(long)]
        integer_check: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct SemigroupInput {
    #[arg(long, value_parser = parse_base)]
    base: Base,
    /// Generators, as decimal integers.
    #[arg(value_parser = parse_decimal)]
    elements: Vec<BigUint>,
}

fn parse_decimal(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
        return Err(format!("'{s}' is not a non-negative decimal integer"));
    }
    BigUint::from_str(s).map_err(|e| e.to_string())
}

fn parse_base(s: &str) -> Result<Base, String> {
    let b: u32 = s.parse().map_err(|e| format!("invalid base '{s}': {e}"))?;
    Base::new(b).map_err(|e| e.to_string())
}

fn parse_bound(s: &str) -> Result<Exponent, String> {
    match s.parse::<Exponent>() {
        Ok(0) => Err("bound must be positive".to_string()),
        Ok(b) => Ok(b),
        Err(e) => Err(format!("invalid bound '{s}': {e}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseRange(RangeInclusive<u32>);

impl FromStr for BaseRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        let lo = parse_base(lo)?.get();
        let hi = parse_base(hi)?.get();
        if lo > hi {
            return Err(format!("empty base range {lo}..{hi}"));
        }
        Ok(BaseRange(lo..=hi))
    }
}

/// A `(start, len)` run in the machine-readable report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunJson {
    pub start: Exponent,
    pub len: Exponent,
}

/// Machine-readable result of `closure`.
///
/// Field order is fixed, so serializing a parsed report reproduces it byte
/// for byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub base: u32,
    pub elements: Vec<String>,
    pub exponents: Vec<Exponent>,
    pub runs: Vec<RunJson>,
    pub tail: Option<Exponent>,
    pub case: String,
    pub d: Option<u64>,
    pub t: Option<Exponent>,
}

impl ClosureReport {
    pub fn new(elements: &[BigUint], construction: &Construction) -> Self {
        let g = &construction.semigroup;
        let (case, d, t) = match construction.case {
            Case::Empty => ("empty", None, None),
            Case::Offset { d, t } => ("case1", Some(d), Some(t)),
            Case::BinaryUnit { inner } => ("case2", inner.map(|(d, _)| d), inner.map(|(_, t)| t)),
            Case::AllPositive => ("case3", Some(0), None),
        };
        ClosureReport {
            base: g.base().get(),
            elements: elements.iter().map(|x| x.to_string()).collect(),
            exponents: construction.exponents.iter().collect(),
            runs: g
                .runs()
                .iter()
                .map(|r| RunJson {
                    start: r.start(),
                    len: r.len(),
                })
                .collect(),
            tail: g.tail(),
            case: case.to_string(),
            d,
            t,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Rebuilds the canonical semigroup the report describes.
    pub fn semigroup(&self) -> crate::Result<DcSemigroup> {
        let runs = self
            .runs
            .iter()
            .map(|r| DigitInterval::new(r.start, r.len))
            .collect::<crate::Result<Vec<_>>>()?;
        DcSemigroup::normalize(Base::new(self.base)?, runs, self.tail)
    }
}

#[derive(Debug, Serialize)]
struct MemberReport<'a> {
    query: String,
    member: bool,
    closure: &'a ClosureReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub base: u32,
    pub exponents: Vec<Exponent>,
    /// "index" or "integer".
    pub oracle: String,
    pub differing: Vec<Exponent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub cases: usize,
    pub integer_cases: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Construction against [`index_closure`] for every non-empty `J` in
/// `{0..=max_exp}`, generators `{b^j : j in J}`; with `integer_check`, also
/// against [`integer_closure`] in bases 2 and 3.
pub fn verify_sweep(
    bases: RangeInclusive<u32>,
    max_exp: Exponent,
    bound: Exponent,
    integer_check: bool,
) -> crate::Result<SweepReport> {
    if max_exp > MAX_SWEEP_EXPONENT {
        return Err(Error::ResourceLimit(format!(
            "max exponent {max_exp} exceeds {MAX_SWEEP_EXPONENT}"
        )));
    }
    if max_exp >= bound {
        return Err(Error::BoundTooSmall {
            bound,
            max: max_exp,
        });
    }
    if integer_check && bound > MAX_INTEGER_BOUND {
        return Err(Error::ResourceLimit(format!(
            "integer cross-check needs bound <= {MAX_INTEGER_BOUND}, got {bound}"
        )));
    }
    let mut report = SweepReport {
        cases: 0,
        integer_cases: 0,
        mismatches: Vec::new(),
    };
    for b in bases {
        let base = Base::new(b)?;
        let power = |j: Exponent| BigUint::from(b).pow(j as u32);
        for mask in 1u32..(1 << (max_exp + 1)) {
            let exponents: ExponentSet = (0..=max_exp).filter(|j| mask >> j & 1 == 1).collect();
            let xs: Vec<BigUint> = exponents.iter().map(power).collect();
            let g = construct(&xs, base)?.semigroup;
            report.cases += 1;

            let mut check = |oracle: &str, reference| {
                let cmp = compare(&g, &reference);
                if !cmp.matches() {
                    report.mismatches.push(Mismatch {
                        base: b,
                        exponents: exponents.iter().collect(),
                        oracle: oracle.to_string(),
                        differing: cmp.differing,
                    });
                }
            };
            check("index", index_closure(&exponents, base, bound)?);
            if integer_check && b <= 3 {
                check("integer", integer_closure(&xs, base, bound)?);
                report.integer_cases += 1;
            }
        }
    }
    Ok(report)
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let sep = if cli.ascii { " U " } else { " ∪ " };
    match &cli.command {
        Command::Closure { input, json } => {
            if input.elements.is_empty() {
                writeln!(err, "warning: no generators given; the closure is empty")?;
            }
            let c = construct(&input.elements, input.base)?;
            let report = ClosureReport::new(&input.elements, &c);
            if *json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                writeln!(out, "{}", c.semigroup.render(sep))?;
            }
            Ok(EXIT_OK)
        }
        Command::Member {
            base,
            query,
            elements,
            json,
        } => {
            if elements.is_empty() {
                writeln!(err, "warning: no generators given; the closure is empty")?;
            }
            let c = construct(elements, *base)?;
            let member = c.semigroup.member(query)?;
            if *json {
                let report = ClosureReport::new(elements, &c);
                let m = MemberReport {
                    query: query.to_string(),
                    member,
                    closure: &report,
                };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&m).expect("report serializes")
                )?;
            } else {
                writeln!(out, "{}", if member { "yes" } else { "no" })?;
            }
            Ok(if member { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Verify {
            bases,
            max_exp,
            bound,
            integer_check,
            json,
        } => {
            let report = verify_sweep(bases.0.clone(), *max_exp, *bound, *integer_check)?;
            if *json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                )?;
            } else {
                for m in &report.mismatches {
                    writeln!(
                        out,
                        "mismatch: base {}, J = {:?}, {} oracle differs at {:?}",
                        m.base, m.exponents, m.oracle, m.differing
                    )?;
                }
                if *integer_check {
                    writeln!(out, "integer cross-check: {} cases", report.integer_cases)?;
                }
                writeln!(
                    out,
                    "{} cases, {} mismatches",
                    report.cases,
                    report.mismatches.len()
                )?;
            }
            Ok(if report.mismatches.is_empty() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}
