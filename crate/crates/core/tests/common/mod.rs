//! Test-only reference for residues: each appended term is a linear map on a
//! small state vector, so a whole block is one matrix power modulo `m`. This
//! shares nothing with the closed-form coefficient path.

#![allow(dead_code)]

use apconcat::{ArithmeticProgression, ConcatenationKind};

type Mat = [[u128; 3]; 3];

fn mul(a: &Mat, b: &Mat, m: u128) -> Mat {
    let mut out = [[0u128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).fold(0, |acc, k| (acc + a[i][k] * b[k][j] % m) % m);
        }
    }
    out
}

fn power(mut base: Mat, mut e: u128, m: u128) -> Mat {
    let mut acc = [[1 % m, 0, 0], [0, 1 % m, 0], [0, 0, 1 % m]];
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base, m);
        }
        base = mul(&base, &base, m);
        e >>= 1;
    }
    acc
}

fn apply(a: &Mat, v: [u128; 3], m: u128) -> [u128; 3] {
    let mut out = [0u128; 3];
    for i in 0..3 {
        out[i] = (0..3).fold(0, |acc, k| (acc + a[i][k] * v[k] % m) % m);
    }
    out
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `(width, number of terms)` for the runs of equal-width terms among
/// `U(0..=n)`, found by stepping through powers of ten.
fn runs(first: u128, step: u128, n: u128) -> Vec<(u32, u128)> {
    let mut out = Vec::new();
    let mut idx = 0u128;
    let mut width = 1u32;
    while idx <= n {
        let upper = 10u128.pow(width);
        let term = first + idx * step;
        if term >= upper {
            width += 1;
            continue;
        }
        // last index whose term is below 10^width
        let last = (upper - 1 - first) / step;
        let stop = last.min(n);
        out.push((width, stop - idx + 1));
        idx = stop + 1;
        width += 1;
    }
    out
}

fn digits_through(first: u128, step: u128, n: u128) -> u128 {
    runs(first, step, n).iter().map(|&(w, c)| w as u128 * c).sum()
}

fn right_mod(first: u128, step: u128, n: u128, m: u128) -> u128 {
    let mut state = [0, first % m, 1 % m];
    for (w, count) in runs(first, step, n) {
        let b = pow_mod(10, w as u128, m);
        let mat = [[b, 1, 0], [0, 1, step % m], [0, 0, 1]];
        state = apply(&power(mat, count, m), state, m);
    }
    state[0]
}

fn left_mod(first: u128, step: u128, n: u128, m: u128) -> u128 {
    let mut state = [0, first % m, 1 % m];
    for (w, count) in runs(first, step, n) {
        let b = pow_mod(10, w as u128, m);
        let mat = [[1, 1, 0], [0, b, step % m * b % m], [0, 0, b]];
        state = apply(&power(mat, count, m), state, m);
    }
    state[0]
}

/// Residue of the `n`-th term modulo `m` (`m < 2^63`).
pub fn reference_mod(kind: ConcatenationKind, prog: ArithmeticProgression, n: u64, m: u64) -> u64 {
    let (first, step, n, m) = (prog.first() as u128, prog.step() as u128, n as u128, m as u128);
    let r = match kind {
        ConcatenationKind::Right => right_mod(first, step, n, m),
        ConcatenationKind::Left => left_mod(first, step, n, m),
        ConcatenationKind::Palindromic => {
            if n == 0 {
                first % m
            } else {
                let right = right_mod(first, step, n, m);
                let left = left_mod(first, step, n - 1, m);
                let shift = pow_mod(10, digits_through(first, step, n - 1), m);
                (right * shift + left) % m
            }
        }
    };
    r as u64
}
