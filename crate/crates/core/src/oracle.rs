//! Naive evaluators: write every progression term out in decimal and parse
//! the result once. Linear in the size of the output; these are the ground
//! truth the closed forms are checked and benchmarked against.

use rug::Integer;

use crate::progression::{ArithmeticProgression, ConcatenationKind};

/// Decimal string of the `n`-th concatenation.
pub fn oracle_string(kind: ConcatenationKind, prog: ArithmeticProgression, n: u64) -> String {
    let len = match kind {
        ConcatenationKind::Palindromic => prog.concat_len(n) + prog.concat_len_before(n),
        _ => prog.concat_len(n),
    };
    let mut out = String::with_capacity(len as usize);
    let push = |out: &mut String, i: u64| {
        use std::fmt::Write;
        write!(out, "{}", prog.term(i)).expect("writing to a String");
    };
    match kind {
        ConcatenationKind::Right => (0..=n).for_each(|i| push(&mut out, i)),
        ConcatenationKind::Left => (0..=n).rev().for_each(|i| push(&mut out, i)),
        ConcatenationKind::Palindromic => {
            (0..=n).for_each(|i| push(&mut out, i));
            (0..n).rev().for_each(|i| push(&mut out, i));
        }
    }
    debug_assert_eq!(out.len() as u128, len);
    out
}

pub fn oracle_eval(kind: ConcatenationKind, prog: ArithmeticProgression, n: u64) -> Integer {
    Integer::from_str_radix(&oracle_string(kind, prog, n), 10).expect("decimal digits only")
}

pub fn oracle_digit_count(kind: ConcatenationKind, prog: ArithmeticProgression, n: u64) -> u64 {
    oracle_string(kind, prog, n).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::progression::digit_count_big;
    use proptest::prelude::*;
    use rug::ops::Pow;
    use ConcatenationKind::*;

    fn ap(first: u64, step: u64) -> ArithmeticProgression {
        ArithmeticProgression::new(first, step).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(oracle_eval(Right, ap(1, 1), 2), 123);
        assert_eq!(oracle_eval(Left, ap(1, 1), 2), 321);
        assert_eq!(oracle_eval(Palindromic, ap(1, 1), 3), 1234321);
        assert_eq!(oracle_eval(Right, ap(1, 2), 2), 135);
        assert_eq!(oracle_eval(Palindromic, ap(1, 2), 2), 13531);
    }

    #[test]
    fn digit_counts() {
        assert_eq!(oracle_digit_count(Left, ap(1, 1), 9), 11);
        assert_eq!(oracle_eval(Left, ap(1, 1), 9), 10987654321u64);
        assert_eq!(oracle_digit_count(Right, ap(1, 1), 0), 1);
        assert_eq!(oracle_digit_count(Right, ap(1, 1), 9), 11);
        assert_eq!(oracle_string(Right, ap(1, 1), 9), "12345678910");
    }

    #[test]
    fn index_zero_is_first_term() {
        for kind in ConcatenationKind::ALL {
            assert_eq!(oracle_eval(kind, ap(42, 5), 0), 42);
        }
    }

    proptest! {
        #[test]
        fn palindromic_composes_right_and_left(first in 1u64..1000, step in 1u64..1000, n in 1u64..200) {
            let p = ap(first, step);
            let right = oracle_eval(Right, p, n);
            let left = oracle_eval(Left, p, n - 1);
            let shift = oracle_digit_count(Left, p, n - 1) as u32;
            prop_assert_eq!(
                oracle_digit_count(Palindromic, p, n),
                oracle_digit_count(Right, p, n) + oracle_digit_count(Left, p, n - 1)
            );
            prop_assert_eq!(oracle_eval(Palindromic, p, n), right * Integer::from(10).pow(shift) + left);
        }

        #[test]
        fn right_and_left_have_equal_lengths(first in 1u64..10_000, step in 1u64..10_000, n in 0u64..300) {
            let p = ap(first, step);
            let r = oracle_digit_count(Right, p, n);
            prop_assert_eq!(r, oracle_digit_count(Left, p, n));
            prop_assert_eq!(r as u128, p.concat_len(n));
            prop_assert_eq!(digit_count_big(&oracle_eval(Right, p, n)).unwrap(), r);
        }
    }
}
