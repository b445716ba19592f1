use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use tracecount::cli::{self, CliError, Options, EXIT_DISAGREEMENT, EXIT_INPUT};
use tracecount::poly::OrderKind;
use tracecount::Rational;

/// Count real and complex solutions of polynomial systems via trace-form signatures.
#[derive(Parser)]
#[command(name = "tracecount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Monomial order for Groebner bases and quotient algebras.
    #[arg(long, global = true, default_value = "degrevlex", value_parser = parse_order)]
    order: OrderKind,
    /// Fixed general-position parameter instead of the retry schedule.
    #[arg(long, global = true, value_parser = parse_rational)]
    t: Option<Rational>,
    /// Parameters tried (t = 1, 2, ...) after the untransformed system.
    #[arg(long, global = true, default_value_t = cli::DEFAULT_MAX_TRIALS)]
    max_trials: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Real, complex and per-H sign counts of a system file.
    Count { input: PathBuf },
    /// Hermite's count for a univariate polynomial, e.g. "x^3 - x".
    Hermite { polynomial: String },
    /// Type, signature and definiteness of a symmetric matrix file.
    Signature { input: PathBuf },
    /// Shape basis of a system file, after a general-position change if needed.
    Shape { input: PathBuf },
    /// Compare the signature counts against the Sturm oracle.
    Verify { input: PathBuf },
    /// Reduced Groebner basis of a system file.
    Groebner { input: PathBuf },
}

fn parse_order(s: &str) -> Result<OrderKind, String> {
    s.parse::<OrderKind>().map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let t: Rational = s.parse().map_err(|e: tracecount::Error| e.to_string())?;
    if t.is_zero() {
        return Err("t must be nonzero".into());
    }
    Ok(t)
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    res.map_err(|e| CliError::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
    } else {
        print!("{value}");
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let opts = Options { order: cli.flags.order, t: cli.flags.t.clone(), max_trials: cli.flags.max_trials };
    let json = cli.flags.json;
    match &cli.command {
        Command::Count { input } => emit(&cli::cmd_count(&read_input(input)?, &opts)?, json),
        Command::Hermite { polynomial } => emit(&cli::cmd_hermite(polynomial)?, json),
        Command::Signature { input } => emit(&cli::cmd_signature(&read_input(input)?)?, json),
        Command::Shape { input } => emit(&cli::cmd_shape(&read_input(input)?, &opts)?, json),
        Command::Groebner { input } => emit(&cli::cmd_groebner(&read_input(input)?, &opts)?, json),
        Command::Verify { input } => {
            let report = cli::cmd_verify(&read_input(input)?, &opts)?;
            emit(&report, json);
            if !report.all_agree {
                return Ok(EXIT_DISAGREEMENT);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
