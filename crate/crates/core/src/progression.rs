//! Progression terms, decimal digit lengths and the digit-length blocks that
//! partition the index line.
//!
//! Everything here is exact integer arithmetic. Indices are `u64`, progression
//! terms are `u128` (a term `U0 + n*d` with 64-bit inputs always fits), and
//! concatenated values are [`rug::Integer`].

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::Integer;

use crate::error::{Error, Result};

/// Largest `l` for which `10^l` fits in a `u128`.
const MAX_U128_POW10: u32 = 38;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArithmeticProgression {
    first: u64,
    step: u64,
}

impl ArithmeticProgression {
    pub fn new(first: u64, step: u64) -> Result<Self> {
        if first == 0 || step == 0 {
            return Err(Error::InvalidProgression { first, step });
        }
        Ok(Self { first, step })
    }

    /// The positive integers 1, 2, 3, ...
    pub fn naturals() -> Self {
        Self { first: 1, step: 1 }
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    /// `U(n) = U0 + n*d`.
    pub fn term(&self, n: u64) -> u128 {
        self.first as u128 + n as u128 * self.step as u128
    }

    /// Index of the first term with at least `length` digits, saturating at
    /// `u64::MAX` when no such index is representable.
    fn first_index_reaching(&self, length: u32) -> u64 {
        if length == 0 {
            return 0;
        }
        let Some(bound) = pow10_u128(length - 1) else {
            return u64::MAX;
        };
        let first = self.first as u128;
        if bound <= first {
            return 0;
        }
        let gap = bound - first;
        let step = self.step as u128;
        let idx = gap.div_ceil(step);
        u64::try_from(idx).unwrap_or(u64::MAX)
    }

    /// Geometry of the block of `length`-digit terms. The block may be empty.
    pub fn block(&self, length: u32) -> BlockGeometry {
        assert!(length >= 1, "digit length must be positive");
        let start = self.first_index_reaching(length);
        let end = self.first_index_reaching(length + 1);
        BlockGeometry {
            length,
            start,
            count: end.saturating_sub(start),
        }
    }

    /// Geometry of the block containing index `n`.
    pub fn block_for_index(&self, n: u64) -> BlockGeometry {
        let length = digit_count(self.term(n)).expect("progression terms are positive");
        self.block(length)
    }

    /// Non-empty blocks, in increasing digit length, that contain at least one
    /// index `<= n`. The last one is the block of `n`.
    pub fn blocks_through(&self, n: u64) -> impl Iterator<Item = BlockGeometry> + '_ {
        let lo = digit_count(self.first as u128).expect("first term is positive");
        let hi = digit_count(self.term(n)).expect("progression terms are positive");
        (lo..=hi).map(|l| self.block(l)).filter(|b| !b.is_empty())
    }

    /// Total number of decimal digits in `U(0), ..., U(n)`; this is the digit
    /// length of both the right and the left concatenation at index `n`.
    pub fn concat_len(&self, n: u64) -> u128 {
        self.blocks_through(n)
            .map(|b| {
                let upto = (n as u128 + 1).min(b.end());
                b.length as u128 * (upto - b.start as u128)
            })
            .sum()
    }

    /// [`concat_len`](Self::concat_len) extended with `concat_len(-1) = 0`.
    pub(crate) fn concat_len_before(&self, n: u64) -> u128 {
        match n.checked_sub(1) {
            Some(prev) => self.concat_len(prev),
            None => 0,
        }
    }
}

impl fmt::Display for ArithmeticProgression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U(n) = {} + {}n", self.first, self.step)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConcatenationKind {
    /// `U(0)U(1)...U(n)`.
    Right,
    /// `U(n)...U(1)U(0)`.
    Left,
    /// `U(0)...U(n)U(n-1)...U(0)`, and `U(0)` at `n = 0`.
    Palindromic,
}

impl ConcatenationKind {
    pub const ALL: [ConcatenationKind; 3] = [Self::Right, Self::Left, Self::Palindromic];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Right => "right",
            Self::Left => "left",
            Self::Palindromic => "palindromic",
        }
    }
}

impl fmt::Display for ConcatenationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConcatenationKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "right" => Ok(Self::Right),
            "left" => Ok(Self::Left),
            "palindromic" => Ok(Self::Palindromic),
            other => Err(format!(
                "unknown concatenation kind `{other}` (expected right, left or palindromic)"
            )),
        }
    }
}

/// A maximal run of indices `[start, start + count)` whose progression terms
/// all have exactly `length` decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockGeometry {
    pub length: u32,
    pub start: u64,
    pub count: u64,
}

impl BlockGeometry {
    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// One past the last index of the block.
    pub fn end(&self) -> u128 {
        self.start as u128 + self.count as u128
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= self.start && (n as u128) < self.end()
    }
}

fn pow10_u128(e: u32) -> Option<u128> {
    (e <= MAX_U128_POW10).then(|| 10u128.pow(e))
}

/// Number of decimal digits of `m`, by comparison against powers of ten.
pub fn digit_count(m: u128) -> Result<u32> {
    if m == 0 {
        return Err(Error::NonPositive);
    }
    Ok(m.ilog10() + 1)
}

/// Number of decimal digits of a positive big integer.
pub fn digit_count_big(m: &Integer) -> Result<u64> {
    if *m <= 0 {
        return Err(Error::NonPositive);
    }
    // 0.30102999 < log10(2): the estimate is a lower bound, off by at most
    // one below about 10^10 bits.
    let bits = m.significant_bits() as u64;
    let mut count = (bits - 1) * 30_102_999 / 100_000_000 + 1;
    while *m >= pow10(count as u128)? {
        count += 1;
    }
    Ok(count)
}

/// `10^e` as a big integer.
pub fn pow10(e: u128) -> Result<Integer> {
    let e32 = u32::try_from(e).map_err(|_| Error::TooLarge(e))?;
    Ok(Integer::from(10).pow(e32))
}

/// `x * 10^e`, computed as `(x * 5^e) << e`.
pub fn mul_pow10(x: &Integer, e: u128) -> Result<Integer> {
    let e32 = u32::try_from(e).map_err(|_| Error::TooLarge(e))?;
    Ok((Integer::from(5).pow(e32) * x) << e32)
}

/// Appends `b`, zero-padded to `width` digits, to the right of `a`:
/// `a * 10^width + b`.
pub fn conc(a: &Integer, b: &Integer, width: u32) -> Result<Integer> {
    let shift = pow10(width as u128)?;
    if *b < 0 || *b >= shift {
        return Err(Error::DigitOverflow {
            value: b.to_string(),
            width,
        });
    }
    Ok(Integer::from(a * &shift) + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ap(first: u64, step: u64) -> ArithmeticProgression {
        ArithmeticProgression::new(first, step).unwrap()
    }

    #[test]
    fn terms() {
        assert_eq!(ap(1, 1).term(5), 6);
        assert_eq!(ap(1, 2).term(5), 11);
        assert_eq!(ap(1, 1).term(0), 1);
        assert_eq!(ap(u64::MAX, u64::MAX).term(u64::MAX), u64::MAX as u128 * (u64::MAX as u128 + 1));
    }

    #[test]
    fn rejects_non_positive_progressions() {
        assert!(ArithmeticProgression::new(0, 1).is_err());
        assert!(ArithmeticProgression::new(1, 0).is_err());
    }

    #[test]
    fn digit_counts() {
        assert_eq!(digit_count(1).unwrap(), 1);
        assert_eq!(digit_count(9).unwrap(), 1);
        assert_eq!(digit_count(10).unwrap(), 2);
        assert_eq!(digit_count(999).unwrap(), 3);
        assert_eq!(digit_count(u128::MAX).unwrap(), 39);
        assert_eq!(digit_count(0), Err(Error::NonPositive));
    }

    #[test]
    fn big_digit_counts_at_powers_of_ten() {
        for e in 0..400u128 {
            let p = pow10(e).unwrap();
            assert_eq!(digit_count_big(&p).unwrap() as u128, e + 1);
            if e > 0 {
                assert_eq!(digit_count_big(&(p - 1u32)).unwrap() as u128, e);
            }
        }
        assert!(digit_count_big(&Integer::new()).is_err());
    }

    #[test]
    fn blocks() {
        let b = ap(1, 1).block_for_index(9);
        assert_eq!((b.length, b.start, b.count), (2, 9, 90));
        let b = ap(1, 2).block_for_index(5);
        assert_eq!((b.length, b.start, b.count), (2, 5, 45));
        let b = ap(1, 1).block_for_index(0);
        assert_eq!((b.length, b.start, b.count), (1, 0, 9));
    }

    #[test]
    fn block_start_rounds_up() {
        // Rounding down would put the start at index 4, whose term is 9.
        let b = ap(1, 2).block(2);
        assert_eq!(b.start, 5);
        assert_eq!(ap(1, 2).term(4), 9);
        assert_eq!(ap(1, 2).term(5), 11);
    }

    #[test]
    fn empty_blocks() {
        assert!(ap(10, 1).block(1).is_empty());
        // 7, 107, 207, ...: no 2-digit terms.
        let p = ap(7, 100);
        assert!(p.block(2).is_empty());
        assert_eq!(p.block(3).start, 1);
        let lengths: Vec<u32> = p.blocks_through(5).map(|b| b.length).collect();
        assert_eq!(lengths, vec![1, 3]);
    }

    #[test]
    fn concat_lengths() {
        let p = ap(1, 1);
        assert_eq!(p.concat_len(0), 1);
        assert_eq!(p.concat_len(9), 11);
        assert_eq!(p.concat_len(999_999), 5_888_896);
        assert_eq!(p.concat_len_before(0), 0);
        assert_eq!(ap(1, 2).concat_len(5), 7);
    }

    #[test]
    fn shifted_products() {
        let x = Integer::from(-123);
        for e in [0u128, 1, 7, 64, 1000] {
            assert_eq!(mul_pow10(&x, e).unwrap(), Integer::from(&x * pow10(e).unwrap()));
        }
    }

    #[test]
    fn conc_examples() {
        let i = |v: u64| Integer::from(v);
        assert_eq!(conc(&i(12), &i(3), 1).unwrap(), 123);
        assert_eq!(conc(&i(0), &i(7), 3).unwrap(), 7);
        assert_eq!(conc(&i(12345678910), &i(11), 2).unwrap(), 1234567891011u64);
        assert!(matches!(conc(&i(1), &i(10), 1), Err(Error::DigitOverflow { .. })));
    }

    #[test]
    fn kind_parsing() {
        for kind in ConcatenationKind::ALL {
            assert_eq!(kind.name().parse::<ConcatenationKind>().unwrap(), kind);
        }
        assert!("middle".parse::<ConcatenationKind>().is_err());
    }

    proptest! {
        #[test]
        fn digit_count_brackets_value(m in 1u128..u128::MAX) {
            let k = digit_count(m).unwrap();
            prop_assert!(10u128.pow(k - 1) <= m);
            if k <= MAX_U128_POW10 {
                prop_assert!(m < 10u128.pow(k));
            }
        }

        #[test]
        fn block_of_index_is_consistent(first in 1u64..100_000, step in 1u64..10_000, n in 0u64..1_000_000) {
            let p = ap(first, step);
            let b = p.block_for_index(n);
            prop_assert!(b.contains(n));
            prop_assert_eq!(digit_count(p.term(n)).unwrap(), b.length);
            prop_assert_eq!(digit_count(p.term(b.start)).unwrap(), b.length);
            if b.start > 0 {
                prop_assert!(digit_count(p.term(b.start - 1)).unwrap() < b.length);
            }
            let last = (b.end() - 1) as u64;
            prop_assert_eq!(digit_count(p.term(last)).unwrap(), b.length);
        }

        #[test]
        fn blocks_tile_the_index_line(first in 1u64..1000, step in 1u64..1000, n in 0u64..100_000) {
            let p = ap(first, step);
            let blocks: Vec<_> = p.blocks_through(n).collect();
            prop_assert_eq!(blocks[0].start, 0);
            for w in blocks.windows(2) {
                prop_assert_eq!(w[0].end(), w[1].start as u128);
            }
            prop_assert!(blocks.last().unwrap().contains(n));
        }

        #[test]
        fn conc_adds_width_digits(a in 1u64.., b in 0u64..1_000_000, extra in 0u32..4) {
            let width = digit_count(b.max(1) as u128).unwrap() + extra;
            let c = conc(&Integer::from(a), &Integer::from(b), width).unwrap();
            prop_assert_eq!(
                digit_count_big(&c).unwrap(),
                digit_count(a as u128).unwrap() as u64 + width as u64
            );
        }
    }
}
