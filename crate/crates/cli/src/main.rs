//! `apconcat`: evaluate, inspect and benchmark concatenations of arithmetic
//! progressions from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
//! consistency failure.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use apconcat::ConcatenationKind;
use clap::{Args, Parser, Subcommand};
use rug::Integer;

#[derive(Debug, Parser)]
#[command(name = "apconcat", version, about = "Concatenations of arithmetic progressions in closed form")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
struct Sequence {
    /// right, left or palindromic
    #[arg(long)]
    kind: ConcatenationKind,
    /// First term of the progression
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    u0: u64,
    /// Common difference
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the n-th term (or its residue with --mod)
    Eval {
        #[command(flatten)]
        seq: Sequence,
        #[arg(long)]
        n: u64,
        #[arg(long = "mod", value_parser = parse_modulus)]
        modulus: Option<Integer>,
        /// Write the term to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Memoize up to this many evaluated terms
        #[arg(long, default_value_t = 0)]
        term_cache: usize,
    },
    /// Print the scaled coefficients of the l-digit block
    Coeffs {
        #[command(flatten)]
        seq: Sequence,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=38))]
        l: u32,
    },
    /// Compare closed-form and naive evaluation for every n up to --max
    Verify {
        #[command(flatten)]
        seq: Sequence,
        #[arg(long)]
        max: u64,
    },
    /// Guess a constant-coefficient recurrence for the integers in a file
    Fit {
        terms_file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
    },
    /// Time closed-form against naive evaluation at n = 10^e - 1
    Bench {
        #[command(flatten)]
        seq: Sequence,
        #[arg(long = "exp", value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
    },
    /// Print the digit count of the n-th term without computing it
    Digits {
        #[command(flatten)]
        seq: Sequence,
        #[arg(long)]
        n: u64,
    },
}

fn parse_modulus(s: &str) -> Result<Integer, String> {
    let m: Integer = s.trim().parse().map_err(|e| format!("invalid integer: {e}"))?;
    if m < 2 {
        return Err("modulus must be at least 2".into());
    }
    Ok(m)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            seq,
            n,
            modulus,
            out,
            term_cache,
        } => commands::eval(seq.into(), n, modulus.as_ref(), out.as_deref(), term_cache),
        Command::Coeffs { seq, l } => commands::coeffs(seq.into(), l),
        Command::Verify { seq, max } => commands::verify(seq.into(), max),
        Command::Fit { terms_file, order } => commands::fit(&terms_file, order as usize),
        Command::Bench { seq, exponents } => commands::bench(seq.into(), &exponents),
        Command::Digits { seq, n } => commands::digits(seq.into(), n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("apconcat: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

impl From<Sequence> for commands::Target {
    fn from(seq: Sequence) -> Self {
        commands::Target {
            kind: seq.kind,
            u0: seq.u0,
            d: seq.d,
        }
    }
}
