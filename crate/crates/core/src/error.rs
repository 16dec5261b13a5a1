use thiserror::Error;

use crate::progression::ConcatenationKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid progression (first term {first}, difference {step}): both must be at least 1")]
    InvalidProgression { first: u64, step: u64 },

    #[error("digit count is only defined for positive integers")]
    NonPositive,

    #[error("{value} does not fit in {width} digits")]
    DigitOverflow { value: String, width: u32 },

    #[error("block of {length}-digit terms is empty")]
    EmptyBlock { length: u32 },

    #[error("block of {length}-digit terms has only {count} terms, at least 3 are needed")]
    BlockTooSmall { length: u32, count: u64 },

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("modulus must be at least 2")]
    InvalidModulus,

    #[error("exponent {0} is too large to materialize")]
    TooLarge(u128),

    /// A closed-form numerator was not divisible by its denominator, or the
    /// coefficients failed to reproduce their own initial values. Either one
    /// means the coefficient construction is wrong.
    #[error("internal consistency failure for {kind:?} block of length {length}: {detail}")]
    Inconsistent {
        kind: ConcatenationKind,
        length: u32,
        detail: &'static str,
    },
}
