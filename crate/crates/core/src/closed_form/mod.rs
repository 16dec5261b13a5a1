//! Closed-form evaluation, block by block.
//!
//! A term is evaluated from the coefficient set of its digit-length block.
//! Building that set needs the last value of the previous block, which is
//! itself evaluated in closed form, so the construction cascades down to the
//! block of `U0`. Blocks with fewer than three terms carry no coefficient set;
//! their terms are obtained by extending the previous block's last value
//! directly.
//!
//! The same code runs modulo `m`: every intermediate is kept modulo `m*D`
//! (with `D` the block denominator), so the final exact division by `D` still
//! makes sense and yields the residue modulo `m`.

mod cache;
mod coefficients;

use rug::ops::RemRounding;
use rug::Integer;

pub use cache::{CacheKey, CoefficientCache};
pub use coefficients::{
    coefficients_for_length, denominator, general_p, reverse_smarandache_p,
    smarandache_coefficients, smarandache_theta_numerator, CoefficientSet,
};

use crate::error::{Error, Result};
use crate::progression::{pow10, ArithmeticProgression, BlockGeometry, ConcatenationKind};
use coefficients::{build, divide_exact, palindromic_from_parts};

/// How intermediates are kept: as exact integers or reduced modulo a
/// positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Reduction {
    Exact,
    Modulo(Integer),
}

impl Reduction {
    pub(crate) fn is_exact(&self) -> bool {
        matches!(self, Reduction::Exact)
    }

    pub(crate) fn reduce(&self, x: Integer) -> Integer {
        match self {
            Reduction::Exact => x,
            Reduction::Modulo(m) => x.rem_euc(m),
        }
    }

    pub(crate) fn pow10(&self, e: u128) -> Result<Integer> {
        match self {
            Reduction::Exact => pow10(e),
            Reduction::Modulo(m) => Ok(Integer::from(10)
                .pow_mod(&Integer::from(e), m)
                .expect("non-negative exponent")),
        }
    }

    /// The same reduction with the modulus multiplied by `factor`.
    pub(crate) fn widen(&self, factor: &Integer) -> Reduction {
        match self {
            Reduction::Exact => Reduction::Exact,
            Reduction::Modulo(m) => Reduction::Modulo(Integer::from(m * factor)),
        }
    }
}

/// The exact `n`-th term.
pub fn evaluate(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    n: u64,
    cache: &CoefficientCache,
) -> Result<Integer> {
    evaluate_in(kind, prog, n, &Reduction::Exact, cache)
}

/// The `n`-th term modulo `modulus`, without materializing the term.
pub fn evaluate_mod(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    n: u64,
    modulus: &Integer,
    cache: &CoefficientCache,
) -> Result<Integer> {
    if *modulus < 2 {
        return Err(Error::InvalidModulus);
    }
    evaluate_in(kind, prog, n, &Reduction::Modulo(modulus.clone()), cache)
}

pub(crate) fn evaluate_in(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    n: u64,
    red: &Reduction,
    cache: &CoefficientCache,
) -> Result<Integer> {
    if n == 0 {
        return Ok(red.reduce(Integer::from(prog.first())));
    }
    if red.is_exact() {
        if let Some(hit) = cache.term(kind, prog, n) {
            return Ok(hit);
        }
    }

    // The first three terms of a block are what its coefficients are built
    // from, so they are cheaper to extend to directly.
    let block = prog.block_for_index(n);
    let value = if block.count >= 3 && n - block.start >= 3 {
        let den = denominator(kind, block.length);
        let wide = red.widen(&den);
        let set = if red.is_exact() {
            coefficients_for_length(kind, prog, block.length, cache)?
        } else {
            std::sync::Arc::new(build(kind, prog, block, &wide, cache)?)
        };
        let num = set.numerator_in(n - block.start, &wide)?;
        red.reduce(divide_exact(num, &den, kind, block.length)?)
    } else {
        extend_directly(kind, prog, n, block, red, cache)?
    };

    if red.is_exact() {
        cache.store_term(kind, prog, n, &value);
    }
    Ok(value)
}

/// Term `n` among the first three of its block: start from the last value of
/// the previous block (or from `U0`) and append the remaining terms.
fn extend_directly(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    n: u64,
    block: BlockGeometry,
    red: &Reduction,
    cache: &CoefficientCache,
) -> Result<Integer> {
    if kind == ConcatenationKind::Palindromic {
        return palindromic_from_parts(prog, n, red, cache);
    }
    let (mut acc, from) = match block.start.checked_sub(1) {
        Some(prev) => (evaluate_in(kind, prog, prev, red, cache)?, block.start),
        None => (red.reduce(Integer::from(prog.first())), 1),
    };
    let width = red.pow10(block.length as u128)?;
    for i in from..=n {
        acc = match kind {
            ConcatenationKind::Right => red.reduce(acc * &width + prog.term(i)),
            _ => red.reduce(red.pow10(prog.concat_len_before(i))? * prog.term(i) + acc),
        };
    }
    Ok(acc)
}

/// Digit count of the `n`-th term from block sums alone.
pub fn term_digit_count(kind: ConcatenationKind, prog: ArithmeticProgression, n: u64) -> u128 {
    match kind {
        ConcatenationKind::Palindromic => prog.concat_len(n) + prog.concat_len_before(n),
        _ => prog.concat_len(n),
    }
}
