//! `krullkit`: build maximal and prime ideals, split polynomials over prime
//! fields and run the executable verifiers from the command line.
//!
//! Ring specs are `Z`, `Z/<n>`, `GF(<p>)`, `GF(<p>)[X]` and `Z[1/<x>]`.
//! Elements are decimal integers, polynomials are written like `3*X^2+X+4`,
//! and elements of `Z[1/x]` as `a/x^k`. Enumerations are `zigzag`, `identity`,
//! `canonical`, `shifted:<k>` and `list:<a>,<b>,...`.
//!
//! Reports are JSON on stdout (`--plain` renders the same report as text).
//! Exit codes: 0 success, 1 failed verification or internal error, 2 parse
//! error, 3 unsupported ring, 4 bound exceeded, 5 precondition violated.

mod commands;
mod report;
mod verify;

use std::io::{self, Read};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use krullkit::maximal::total_oracle_calls;
use krullkit::parse::RingSpec;
use krullkit::Error;

use report::Report;

#[derive(Parser)]
#[command(name = "krullkit", version, about = "Constructive maximal and prime ideals")]
struct Cli {
    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,

    /// Render the report as indented text
    #[arg(long, global = true)]
    plain: bool,

    /// Omit the wall-time field so output is byte-identical across runs
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace the maximal-ideal chain over the first n enumerated elements
    Maximal {
        #[arg(long)]
        ring: String,
        /// Enumeration spec (defaults to the ring's own)
        #[arg(long = "enum")]
        enumeration: Option<String>,
        #[arg(short = 'n', long = "count", default_value_t = 10)]
        count: u64,
        /// Comma-separated generators of the base ideal
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        base: String,
    },
    /// Split a monic polynomial over GF(p) by repeated root adjunction
    Split {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// A prime ideal avoiding the non-nilpotent element x
    Prime {
        #[arg(long)]
        ring: String,
        #[arg(short = 'x', allow_hyphen_values = true)]
        x: String,
        /// Number of enumerated elements listed with their membership
        #[arg(long, default_value_t = 12)]
        samples: u64,
    },
    /// A maximal ideal containing 1 - xy, hence avoiding x
    Jacobson {
        #[arg(long)]
        ring: String,
        #[arg(short = 'x', allow_hyphen_values = true)]
        x: String,
        #[arg(short = 'y', allow_hyphen_values = true)]
        y: String,
        /// Number of enumerated elements scanned for members
        #[arg(long, default_value_t = 12)]
        samples: u64,
    },
    /// Run a verification suite; exits 1 if any case fails
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        ring: String,
        /// Degree bound for test-cases
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long, default_value_t = 2)]
        cols: usize,
        /// Indices compared across membership routes in oracle-equivalence
        #[arg(short = 'n', long = "count", default_value_t = 10)]
        count: u64,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        base: String,
        /// Sample count for sampled checks
        #[arg(long, default_value_t = 50)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Read polynomials for test-cases from stdin, one per line
        #[arg(long)]
        stdin: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    TestCases,
    Matrix,
    OracleEquivalence,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::Unsupported(_) => 3,
        Error::BoundExceeded(_) => 4,
        Error::PreconditionViolated(_) | Error::TrivialQuotient => 5,
        _ => 1,
    }
}

fn read_polys() -> krullkit::Result<Vec<String>> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

/// Runs the command; the flag is false when a verification suite failed.
fn run(command: Command) -> krullkit::Result<(&'static str, Value, Value, bool)> {
    Ok(match command {
        Command::Maximal { ring, enumeration, count, base } => {
            let spec: RingSpec = ring.parse()?;
            let (inputs, result) = commands::maximal(&spec, enumeration.as_deref(), count, &base)?;
            ("maximal", inputs, result, true)
        }
        Command::Split { field, poly } => {
            let (inputs, result) = commands::split(&field.parse()?, &poly)?;
            ("split", inputs, result, true)
        }
        Command::Prime { ring, x, samples } => {
            let (inputs, result) = commands::prime(&ring.parse()?, &x, samples)?;
            ("prime", inputs, result, true)
        }
        Command::Jacobson { ring, x, y, samples } => {
            let (inputs, result) = commands::jacobson(&ring.parse()?, &x, &y, samples)?;
            ("jacobson", inputs, result, true)
        }
        Command::Verify { suite, ring, max_deg, rows, cols, count, base, samples, seed, stdin } => {
            let spec: RingSpec = ring.parse()?;
            let params = verify::Params {
                max_deg,
                rows,
                cols,
                count,
                samples,
                seed,
                base,
                polys: if stdin { Some(read_polys()?) } else { None },
            };
            let outcome = match suite {
                Suite::TestCases => verify::test_cases(&spec, &params)?,
                Suite::Matrix => verify::matrix(&spec, &params)?,
                Suite::OracleEquivalence => verify::oracle_equivalence(&spec, &params)?,
            };
            ("verify", outcome.inputs, outcome.result, outcome.passed)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let calls_before = total_oracle_calls();
    match run(cli.command) {
        Ok((command, inputs, result, passed)) => {
            let report = Report {
                command,
                inputs,
                result,
                oracle_calls: total_oracle_calls() - calls_before,
                wall_time_ms: (!cli.no_timing)
                    .then(|| (start.elapsed().as_secs_f64() * 1e6).round() / 1e3),
            };
            if cli.plain {
                print!("{}", report.to_plain());
            } else {
                println!("{}", report.to_json());
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
