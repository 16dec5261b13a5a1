//! Exact evaluation of concatenations of arithmetic progressions.
//!
//! For a progression `U(n) = U0 + n*d` there are three concatenated sequences:
//!
//! - right: `U(0)U(1)...U(n)` (1, 12, 123, ... for the positive integers),
//! - left: `U(n)...U(1)U(0)` (1, 21, 321, ...),
//! - palindromic: the right concatenation at `n` followed by the left one at
//!   `n - 1` (1, 121, 12321, ...).
//!
//! Within a run of indices whose terms share a digit length, each sequence is
//! a fixed combination of `1`, `n`, `10^(l*n)` and friends, so the `n`-th term
//! costs one big power of ten and a few multiplications instead of writing out
//! every digit.
//!
//! - [`progression`]: terms, digit lengths, block geometry.
//! - [`oracle`]: naive decimal-string evaluators used as ground truth.
//! - [`recurrence`]: the order-3 recurrences inside a block, and a guesser.
//! - [`closed_form`]: coefficient sets, their cache, exact and modular evaluation.

pub mod closed_form;
pub mod error;
mod linsolve;
pub mod oracle;
pub mod progression;
pub mod recurrence;

pub use closed_form::{
    coefficients_for_length, evaluate, evaluate_mod, general_p, reverse_smarandache_p,
    smarandache_coefficients, term_digit_count, CoefficientCache, CoefficientSet,
};
pub use error::{Error, Result};
pub use oracle::{oracle_digit_count, oracle_eval};
pub use progression::{conc, digit_count, ArithmeticProgression, BlockGeometry, ConcatenationKind};
pub use recurrence::{fit_recurrence, recurrence_for, verify_basis, verify_window, Fit, RecurrenceSpec};
