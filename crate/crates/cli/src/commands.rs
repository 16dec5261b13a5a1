use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use apconcat::recurrence::{fit_recurrence, Fit};
use apconcat::{
    coefficients_for_length, evaluate, evaluate_mod, oracle_eval, term_digit_count, ArithmeticProgression,
    CoefficientCache, ConcatenationKind, Error,
};
use rug::Integer;

/// Terms longer than this must go to a file.
const MAX_STDOUT_DIGITS: u128 = 100_000_000;

#[derive(Debug, Clone, Copy)]
pub struct Target {
    pub kind: ConcatenationKind,
    pub u0: u64,
    pub d: u64,
}

impl Target {
    fn progression(&self) -> Result<ArithmeticProgression, CliError> {
        Ok(ArithmeticProgression::new(self.u0, self.d)?)
    }
}

#[derive(Debug)]
pub enum CliError {
    Mismatch(String),
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Mismatch(s) | CliError::Usage(s) | CliError::Internal(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::Inconsistent { .. } => CliError::Internal(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

pub fn eval(
    target: Target,
    n: u64,
    modulus: Option<&Integer>,
    out: Option<&Path>,
    term_cache: usize,
) -> Result<(), CliError> {
    let prog = target.progression()?;
    let cache = CoefficientCache::with_term_capacity(term_cache);
    let value = match modulus {
        Some(m) => evaluate_mod(target.kind, prog, n, m, &cache)?,
        None => {
            let digits = term_digit_count(target.kind, prog, n);
            if out.is_none() && digits > MAX_STDOUT_DIGITS {
                return Err(CliError::Usage(format!(
                    "term has {digits} digits; use --out FILE for terms over {MAX_STDOUT_DIGITS} digits"
                )));
            }
            evaluate(target.kind, prog, n, &cache)?
        }
    };
    let text = value.to_string();
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            writeln!(file, "{text}")?;
            file.flush()?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

pub fn coeffs(target: Target, l: u32) -> Result<(), CliError> {
    let prog = target.progression()?;
    let cache = CoefficientCache::new();
    let set = coefficients_for_length(target.kind, prog, l, &cache)?;
    println!("l={}", set.length());
    println!("t={}", set.start());
    println!("D={}", set.denominator);
    println!("A={}", set.a);
    println!("M={}", set.m);
    println!("T={}", set.t);
    if let Some(p) = set.digit_offset {
        println!("p={p}");
    }
    Ok(())
}

pub fn verify(target: Target, max: u64) -> Result<(), CliError> {
    let prog = target.progression()?;
    let cache = CoefficientCache::new();
    for n in 0..=max {
        let fast = evaluate(target.kind, prog, n, &cache)?;
        if fast != oracle_eval(target.kind, prog, n) {
            println!("MISMATCH at n={n}");
            return Err(CliError::Mismatch(format!("closed form differs from oracle at n={n}")));
        }
    }
    println!("OK {} terms", max as u128 + 1);
    Ok(())
}

pub fn parse_terms(text: &str) -> Result<Vec<Integer>, CliError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<Integer>()
                .map_err(|_| CliError::Usage(format!("not an integer: `{tok}`")))
        })
        .collect()
}

pub fn fit(path: &Path, order: usize) -> Result<(), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let terms = parse_terms(&text)?;
    match fit_recurrence(&terms, order)? {
        Fit::Found(coeffs) => {
            let line: Vec<String> = coeffs.iter().map(Integer::to_string).collect();
            println!("{}", line.join(" "));
        }
        Fit::NoFit => println!("no recurrence of order {order}"),
    }
    Ok(())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

pub fn bench(target: Target, exponents: &[u32]) -> Result<(), CliError> {
    let prog = target.progression()?;
    let mut rows = Vec::with_capacity(exponents.len());
    for &e in exponents {
        let n = 10u64
            .checked_pow(e)
            .filter(|&p| p >= 1)
            .ok_or_else(|| CliError::Usage(format!("exponent {e} too large")))?
            - 1;
        let (fast, fast_time) = timed(|| evaluate(target.kind, prog, n, &CoefficientCache::new()));
        let fast = fast?;
        let (slow, slow_time) = timed(|| oracle_eval(target.kind, prog, n));
        if fast != slow {
            return Err(CliError::Mismatch(format!(
                "closed form and oracle differ at n={n}; no timings reported"
            )));
        }
        rows.push((e, n, fast_time, slow_time));
    }

    println!("{:>4} {:>12} {:>12} {:>12} {:>8}", "exp", "n", "closed_s", "oracle_s", "speedup");
    for (e, n, fast, slow) in rows {
        let ratio = slow.as_secs_f64() / fast.as_secs_f64().max(f64::MIN_POSITIVE);
        println!(
            "{:>4} {:>12} {:>12.6} {:>12.6} {:>8.2}",
            e,
            n,
            fast.as_secs_f64(),
            slow.as_secs_f64(),
            ratio
        );
    }
    Ok(())
}

pub fn digits(target: Target, n: u64) -> Result<(), CliError> {
    let prog = target.progression()?;
    println!("{}", term_digit_count(target.kind, prog, n));
    Ok(())
}
