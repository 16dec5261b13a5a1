//! Per-block coefficient sets.
//!
//! Inside the block of `l`-digit terms starting at index `t`, with `B = 10^l`,
//! `E = B - 1` and `k = n - t`, every term has the form
//!
//! | kind        | numerator                     | denominator `D` |
//! |-------------|-------------------------------|-----------------|
//! | right       | `A + M*k + T*B^k`             | `E^2`           |
//! | left        | `A + (M + T*k)*B^k`           | `E^2`           |
//! | palindromic | `A + M*B^k + T*B^(2k)`        | `(B + 1)*E^2`   |
//!
//! and the division by `D` is exact. The three scaled coefficients come from
//! the first three concatenations of the block, `s0, s1, s2`, which are
//! obtained by extending the last value of the previous block.

use rug::ops::Pow;
use rug::Integer;

use super::cache::{CacheKey, CoefficientCache};
use super::{evaluate, evaluate_in, Reduction};
use crate::error::{Error, Result};
use crate::progression::{conc, mul_pow10, pow10, ArithmeticProgression, BlockGeometry, ConcatenationKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSet {
    pub kind: ConcatenationKind,
    pub block: BlockGeometry,
    /// Digit length of the left concatenation at the block start; only the
    /// left layout uses it.
    pub digit_offset: Option<u128>,
    pub denominator: Integer,
    pub a: Integer,
    pub m: Integer,
    pub t: Integer,
    pub(crate) factored: Option<Factored>,
}

/// `M` and `T` with a common power of ten `10^shift` divided out. Left and
/// palindromic coefficients carry such a factor (the digit length of what
/// sits to their right), and multiplying by it separately keeps the operands
/// of the big multiplications small.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Factored {
    shift: u128,
    m: Integer,
    t: Integer,
}

impl CoefficientSet {
    pub fn length(&self) -> u32 {
        self.block.length
    }

    pub fn start(&self) -> u64 {
        self.block.start
    }

    /// The scaled numerator at offset `k` into the block, reduced by `red`.
    pub(crate) fn numerator_in(&self, k: u64, red: &Reduction) -> Result<Integer> {
        if red.is_exact() {
            return self.exact_numerator(k);
        }
        let l = self.block.length as u128;
        let k_int = Integer::from(k);
        let growth = red.pow10(l * k as u128)?;
        let value = match self.kind {
            ConcatenationKind::Right => {
                Integer::from(&self.m * &k_int) + &self.a + red.reduce(growth * &self.t)
            }
            ConcatenationKind::Left => {
                let inner = red.reduce(Integer::from(&self.t * &k_int) + &self.m);
                red.reduce(inner * growth) + &self.a
            }
            ConcatenationKind::Palindromic => {
                let square = red.reduce(Integer::from(&growth * &growth));
                red.reduce(Integer::from(&self.m * &growth))
                    + red.reduce(square * &self.t)
                    + &self.a
            }
        };
        Ok(red.reduce(value))
    }

    fn exact_numerator(&self, k: u64) -> Result<Integer> {
        let lk = self.block.length as u128 * k as u128;
        let (shift, m, t) = match &self.factored {
            Some(f) => (f.shift, &f.m, &f.t),
            None => (0, &self.m, &self.t),
        };
        let value = match self.kind {
            ConcatenationKind::Right => {
                mul_pow10(t, lk)? + Integer::from(m * k) + &self.a
            }
            ConcatenationKind::Left => {
                mul_pow10(&(Integer::from(t * k) + m), shift + lk)? + &self.a
            }
            ConcatenationKind::Palindromic => {
                mul_pow10(t, shift + 2 * lk)? + mul_pow10(m, shift + lk)? + &self.a
            }
        };
        Ok(value)
    }

    pub fn numerator_at(&self, k: u64) -> Result<Integer> {
        self.numerator_in(k, &Reduction::Exact)
    }

    /// Exact value at index `n`, which must lie in the block.
    pub fn value_at(&self, n: u64) -> Result<Integer> {
        assert!(self.block.contains(n), "index {n} outside block {:?}", self.block);
        let num = self.numerator_at(n - self.block.start)?;
        divide_exact(num, &self.denominator, self.kind, self.block.length)
    }
}

pub(crate) fn divide_exact(
    num: Integer,
    den: &Integer,
    kind: ConcatenationKind,
    length: u32,
) -> Result<Integer> {
    let (q, r) = num.div_rem_euc(den.clone());
    if r != 0 {
        return Err(Error::Inconsistent {
            kind,
            length,
            detail: "closed-form numerator not divisible by its denominator",
        });
    }
    Ok(q)
}

pub fn denominator(kind: ConcatenationKind, length: u32) -> Integer {
    let b = pow10(length as u128).expect("digit length is small");
    let e2 = Integer::from(&b - 1u32).pow(2);
    match kind {
        ConcatenationKind::Right | ConcatenationKind::Left => e2,
        ConcatenationKind::Palindromic => e2 * (b + 1u32),
    }
}

fn checked_block(prog: ArithmeticProgression, length: u32) -> Result<BlockGeometry> {
    let block = prog.block(length);
    if block.is_empty() {
        return Err(Error::EmptyBlock { length });
    }
    if block.count < 3 {
        return Err(Error::BlockTooSmall {
            length,
            count: block.count,
        });
    }
    Ok(block)
}

/// Coefficient set of the `l`-digit block, memoized in `cache`.
pub fn coefficients_for_length(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    length: u32,
    cache: &CoefficientCache,
) -> Result<std::sync::Arc<CoefficientSet>> {
    let block = checked_block(prog, length)?;
    cache.get_or_try_insert_with(CacheKey::new(kind, prog, length), || {
        build(kind, prog, block, &Reduction::Exact, cache)
    })
}

/// The first three concatenations of the block, reduced by `red`.
fn initial_values(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    block: BlockGeometry,
    red: &Reduction,
    cache: &CoefficientCache,
) -> Result<[Integer; 3]> {
    let t = block.start;
    let l = block.length as u128;
    let previous = |kind| match t.checked_sub(1) {
        Some(prev) => evaluate_in(kind, prog, prev, red, cache),
        None => Ok(Integer::new()),
    };
    let values = match kind {
        ConcatenationKind::Right => {
            let b = pow10(l)?;
            let mut acc = previous(kind)?;
            [0u64, 1, 2].map(|j| {
                acc = red.reduce(Integer::from(&acc * &b) + prog.term(t + j));
                acc.clone()
            })
        }
        ConcatenationKind::Left => {
            let base_len = prog.concat_len_before(t);
            let mut acc = previous(kind)?;
            let mut out: [Integer; 3] = Default::default();
            for (j, slot) in out.iter_mut().enumerate() {
                let shift = red.pow10(base_len + j as u128 * l)?;
                acc = red.reduce(shift * prog.term(t + j as u64) + &acc);
                *slot = acc.clone();
            }
            out
        }
        ConcatenationKind::Palindromic => {
            let mut out: [Integer; 3] = Default::default();
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = palindromic_from_parts(prog, t + j as u64, red, cache)?;
            }
            out
        }
    };
    Ok(values)
}

/// `R(n) * 10^len(L(n-1)) + L(n-1)`, with `L(-1)` empty.
pub(crate) fn palindromic_from_parts(
    prog: ArithmeticProgression,
    n: u64,
    red: &Reduction,
    cache: &CoefficientCache,
) -> Result<Integer> {
    let right = evaluate_in(ConcatenationKind::Right, prog, n, red, cache)?;
    let Some(prev) = n.checked_sub(1) else {
        return Ok(right);
    };
    let left = evaluate_in(ConcatenationKind::Left, prog, prev, red, cache)?;
    let shift = red.pow10(prog.concat_len(prev))?;
    Ok(red.reduce(right * shift + left))
}

/// Builds the coefficient set with every coefficient reduced by `red`, which
/// for the modular path must already be a multiple of the block denominator.
pub(crate) fn build(
    kind: ConcatenationKind,
    prog: ArithmeticProgression,
    block: BlockGeometry,
    red: &Reduction,
    cache: &CoefficientCache,
) -> Result<CoefficientSet> {
    let length = block.length;
    let b = pow10(length as u128)?;
    let e = Integer::from(&b - 1u32);
    let u = Integer::from(prog.term(block.start));
    let d = Integer::from(prog.step());
    let den = denominator(kind, length);

    // Palindromic coefficients divide by B once, so their initial values are
    // needed modulo one more factor of B.
    let wide = match kind {
        ConcatenationKind::Palindromic => red.widen(&b),
        _ => red.clone(),
    };
    let [s0, s1, s2] = initial_values(kind, prog, block, &wide, cache)?;

    let mut digit_offset = None;
    let (a, m, t) = match kind {
        ConcatenationKind::Right => {
            let a = -(Integer::from(&e * &u) + Integer::from(&d * &b));
            let m = -Integer::from(&d * &e);
            let t = Integer::from(&s2 - 2 * &s1) + &s0;
            (a, m, t)
        }
        ConcatenationKind::Left => {
            let p = prog.concat_len_before(block.start) + length as u128;
            digit_offset = Some(p);
            let scale = red.pow10(p)?;
            let a = Integer::from(&s2 - 2 * Integer::from(&b * &s1)) + Integer::from(&b * &b) * &s0;
            let m = (Integer::from(&e * &u) - &d) * &scale;
            let t = d.clone() * &e * scale;
            (a, m, t)
        }
        ConcatenationKind::Palindromic => {
            let b2 = Integer::from(&b * &b);
            let b3 = Integer::from(&b2 * &b);
            let a = Integer::from(&b3 * &s0) - Integer::from(&b * (Integer::from(&b + 1u32) * &s1)) + &s2;
            let mu_part = wide.reduce(
                Integer::from(&b2 * &s0) - Integer::from(&b2 + 1u32) * &s1 + &s2,
            );
            let theta_part = wide.reduce(
                Integer::from(&b * &s0) - Integer::from(&b + 1u32) * &s1 + &s2,
            );
            let m = -divide_exact(mu_part, &b, kind, length)? * Integer::from(&b + 1u32);
            let t = divide_exact(theta_part, &b, kind, length)?;
            (a, m, t)
        }
    };

    let mut set = CoefficientSet {
        kind,
        block,
        digit_offset,
        denominator: den,
        a: red.reduce(a),
        m: red.reduce(m),
        t: red.reduce(t),
        factored: None,
    };

    // The coefficients must reproduce the values they were built from.
    for (k, s) in [s0, s1, s2].into_iter().enumerate() {
        let lhs = set.numerator_in(k as u64, red)?;
        if lhs != red.reduce(s * &set.denominator) {
            return Err(Error::Inconsistent {
                kind,
                length,
                detail: "coefficients do not reproduce the block's initial values",
            });
        }
    }
    if red.is_exact() {
        let shift = match kind {
            ConcatenationKind::Right => 0,
            ConcatenationKind::Left => set.digit_offset.unwrap_or(0),
            ConcatenationKind::Palindromic => prog.concat_len_before(block.start),
        };
        if shift > 0 {
            set.factored = Some(factor_out(&set, shift)?);
        }
    }
    Ok(set)
}

fn factor_out(set: &CoefficientSet, shift: u128) -> Result<Factored> {
    let power = pow10(shift)?;
    let split = |x: &Integer| {
        let (q, r) = <(Integer, Integer)>::from(x.div_rem_ref(&power));
        if r != 0 {
            return Err(Error::Inconsistent {
                kind: set.kind,
                length: set.block.length,
                detail: "coefficient lacks its expected power-of-ten factor",
            });
        }
        Ok(q)
    };
    Ok(Factored {
        shift,
        m: split(&set.m)?,
        t: split(&set.t)?,
    })
}

/// Numerator of the exponential coefficient for the concatenation of the
/// positive integers, built by three right appends to the last term of the
/// previous block.
pub fn smarandache_theta_numerator(length: u32, cache: &CoefficientCache) -> Result<Integer> {
    assert!(length >= 1, "digit length must be positive");
    if length == 1 {
        return Ok(Integer::from(100));
    }
    let naturals = ArithmeticProgression::naturals();
    let start = pow10(length as u128 - 1)? - 1u32;
    let start_idx = start.to_u64().ok_or(Error::TooLarge(length as u128))?;
    let before = evaluate(ConcatenationKind::Right, naturals, start_idx - 1, cache)?;
    let s0 = conc(&before, &Integer::from(&start + 1u32), length)?;
    let s1 = conc(&s0, &Integer::from(&start + 2u32), length)?;
    let s2 = conc(&s1, &Integer::from(&start + 3u32), length)?;
    Ok(Integer::from(&s2 - 2 * &s1) + s0)
}

/// Right-concatenation coefficients for the positive integers from their
/// direct formulas: `t = 10^(l-1) - 1`, `A = -(10^(2l-1) + 9*10^(l-1))`,
/// `M = -(10^l - 1)`.
pub fn smarandache_coefficients(length: u32, cache: &CoefficientCache) -> Result<CoefficientSet> {
    assert!(length >= 1, "digit length must be positive");
    let l = length as u128;
    let b = pow10(l)?;
    let lower = pow10(l - 1)?;
    let start = Integer::from(&lower - 1u32)
        .to_u64()
        .ok_or(Error::TooLarge(l))?;
    let a = -(pow10(2 * l - 1)? + Integer::from(&lower * 9u32));
    let t = smarandache_theta_numerator(length, cache)?;
    let count = Integer::from(&b - &lower).to_u64().ok_or(Error::TooLarge(l))?;
    Ok(CoefficientSet {
        kind: ConcatenationKind::Right,
        block: BlockGeometry {
            length,
            start,
            count,
        },
        digit_offset: None,
        denominator: denominator(ConcatenationKind::Right, length),
        factored: None,
        a,
        m: -(b - 1u32),
        t,
    })
}

/// Digit length of the left concatenation of the positive integers at the
/// start of the `l`-digit block: `(10^(l-1) * (9l - 10) + 9l + 1) / 9`.
pub fn reverse_smarandache_p(length: u32) -> Integer {
    assert!(length >= 1, "digit length must be positive");
    let l = Integer::from(length);
    let lower = pow10(length as u128 - 1).expect("digit length is small");
    let num = lower * (Integer::from(9 * &l) - 10u32) + Integer::from(9 * &l) + 1u32;
    let (q, r) = num.div_rem_euc(Integer::from(9));
    debug_assert_eq!(r, 0);
    q
}

/// Digit length of the left concatenation at the start of the `l`-digit
/// block, for any progression: the digits of every earlier block plus `l`.
pub fn general_p(prog: ArithmeticProgression, length: u32) -> Result<u128> {
    let block = prog.block(length);
    if block.is_empty() {
        return Err(Error::EmptyBlock { length });
    }
    let earlier: u128 = (1..length)
        .map(|k| prog.block(k))
        .filter(|b| !b.is_empty())
        .map(|b| b.length as u128 * b.count as u128)
        .sum();
    Ok(earlier + length as u128)
}
