//! Order-3 constant-coefficient recurrences satisfied inside a digit-length
//! block, plus a small exact guesser for constant-coefficient recurrences.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::linsolve;
use crate::progression::{pow10, ConcatenationKind};

/// `c3*a(n+3) + c2*a(n+2) + c1*a(n+1) + c0*a(n) = 0`, with `c3 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub kind: ConcatenationKind,
    pub length: u32,
    /// `[c3, c2, c1, c0]`.
    pub coeffs: [Integer; 4],
}

impl RecurrenceSpec {
    pub const ORDER: usize = 3;

    /// Left-hand side of the recurrence on `a(n), ..., a(n+3)`.
    pub fn residual(&self, window: &[Integer]) -> Integer {
        debug_assert_eq!(window.len(), Self::ORDER + 1);
        self.coeffs
            .iter()
            .zip(window.iter().rev())
            .map(|(c, a)| Integer::from(c * a))
            .sum()
    }

    pub fn characteristic_at(&self, x: &Integer) -> Integer {
        // Horner, highest degree first.
        self.coeffs
            .iter()
            .fold(Integer::new(), |acc, c| acc * x + c)
    }

    pub fn characteristic_derivative_at(&self, x: &Integer) -> Integer {
        let [c3, c2, c1, _] = &self.coeffs;
        Integer::from(3 * c3) * x.clone().pow(2) + Integer::from(2 * c2) * x + c1
    }
}

pub fn recurrence_for(kind: ConcatenationKind, length: u32) -> RecurrenceSpec {
    assert!(length >= 1, "digit length must be positive");
    let b = pow10(length as u128).expect("recurrence for a materializable digit length");
    let b2 = b.clone().pow(2);
    let one = Integer::from(1);
    let coeffs = match kind {
        // (x - 1)^2 (x - B)
        ConcatenationKind::Right => [
            one,
            -(b.clone() + 2u32),
            Integer::from(2 * &b) + 1u32,
            -b,
        ],
        // (x - 1) (x - B)^2
        ConcatenationKind::Left => [
            one,
            -(Integer::from(2 * &b) + 1u32),
            Integer::from(&b2 + 2 * &b),
            -b2,
        ],
        // (x - 1) (x - B) (x - B^2)
        ConcatenationKind::Palindromic => {
            let b3 = Integer::from(&b2 * &b);
            [
                one,
                -(Integer::from(&b + &b2) + 1u32),
                Integer::from(&b + &b2) + &b3,
                -b3,
            ]
        }
    };
    RecurrenceSpec {
        kind,
        length,
        coeffs,
    }
}

/// True iff every run of four consecutive values satisfies the recurrence.
/// Windows shorter than four values are vacuously accepted.
pub fn verify_window(spec: &RecurrenceSpec, window: &[Integer]) -> bool {
    window.windows(4).all(|w| spec.residual(w) == 0)
}

/// One element of a basis of solutions: `n^i * 10^(j*l*n)` with `i` in {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTerm {
    One,
    Index,
    /// `10^(j*l*n)`.
    Power(u32),
    /// `n * 10^(j*l*n)`.
    IndexPower(u32),
}

impl BasisTerm {
    pub fn value(&self, length: u32, n: u64) -> Integer {
        let power = |j: u32| pow10(j as u128 * length as u128 * n as u128).expect("basis power fits");
        match *self {
            BasisTerm::One => Integer::from(1),
            BasisTerm::Index => Integer::from(n),
            BasisTerm::Power(j) => power(j),
            BasisTerm::IndexPower(j) => power(j) * n,
        }
    }
}

pub fn basis(kind: ConcatenationKind) -> [BasisTerm; 3] {
    match kind {
        ConcatenationKind::Right => [BasisTerm::One, BasisTerm::Index, BasisTerm::Power(1)],
        ConcatenationKind::Left => [BasisTerm::One, BasisTerm::Power(1), BasisTerm::IndexPower(1)],
        ConcatenationKind::Palindromic => [BasisTerm::One, BasisTerm::Power(1), BasisTerm::Power(2)],
    }
}

/// Checks the recurrence on `f(n), ..., f(n+3)` for every sampled `n`.
pub fn sequence_satisfies<F>(spec: &RecurrenceSpec, f: F, indices: &[u64]) -> bool
where
    F: Fn(u64) -> Integer,
{
    indices.iter().all(|&n| {
        let window: Vec<Integer> = (n..n + 4).map(&f).collect();
        spec.residual(&window) == 0
    })
}

pub fn verify_basis(kind: ConcatenationKind, length: u32, indices: &[u64]) -> bool {
    let spec = recurrence_for(kind, length);
    basis(kind)
        .iter()
        .all(|term| sequence_satisfies(&spec, |n| term.value(length, n), indices))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fit {
    /// Primitive integer coefficients `[c_order, ..., c_0]` with `c_order > 0`.
    /// For every sequence seen in practice here `c_order = 1`.
    Found(Vec<Integer>),
    NoFit,
}

/// Guesses a constant-coefficient recurrence of the given order: solves on the
/// first `order + 1` windows, then requires every window to satisfy it.
pub fn fit_recurrence(terms: &[Integer], order: usize) -> Result<Fit> {
    assert!(order >= 1, "recurrence order must be positive");
    let needed = 2 * order + 2;
    if terms.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: terms.len(),
        });
    }
    if terms.iter().all(|t| *t == 0) {
        return Ok(Fit::NoFit);
    }

    let fit_windows = order + 1;
    let rows: Vec<Vec<Rational>> = (0..fit_windows)
        .map(|i| (0..order).map(|j| Rational::from(&terms[i + j])).collect())
        .collect();
    let rhs: Vec<Rational> = (0..fit_windows)
        .map(|i| Rational::from(-terms[i + order].clone()))
        .collect();
    let Some(solution) = linsolve::solve(rows, rhs) else {
        return Ok(Fit::NoFit);
    };

    // [c_order = 1, c_{order-1}, ..., c_0]
    let rational: Vec<Rational> = std::iter::once(Rational::from(1))
        .chain(solution.into_iter().rev())
        .collect();
    let coeffs = primitive_integer(&rational);

    let valid = terms.windows(order + 1).all(|w| {
        coeffs
            .iter()
            .zip(w.iter().rev())
            .map(|(c, a)| Integer::from(c * a))
            .sum::<Integer>()
            == 0
    });
    Ok(if valid { Fit::Found(coeffs) } else { Fit::NoFit })
}

/// Clears denominators and removes the content; the leading entry is
/// positive on input and stays positive.
fn primitive_integer(values: &[Rational]) -> Vec<Integer> {
    let lcm = values
        .iter()
        .fold(Integer::from(1), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<Integer> = values
        .iter()
        .map(|q| Integer::from(q.numer() * &lcm) / q.denom())
        .collect();
    let content = ints.iter().fold(Integer::new(), |acc, v| acc.gcd(v));
    ints.into_iter().map(|v| v / &content).collect()
}
