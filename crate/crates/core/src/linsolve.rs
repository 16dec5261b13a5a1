//! Gaussian elimination over exact rationals for the small systems that come
//! up when fitting recurrences.

use rug::Rational;

/// Solves `rows * x = rhs`. Returns `None` when the system is inconsistent.
/// Underdetermined systems get their free variables set to zero.
pub(crate) fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::with_capacity(n_cols);
    let mut r = 0;
    for c in 0..n_cols {
        let Some(p) = (r..n_rows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = Rational::from(rows[r][c].recip_ref());
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..n_rows {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..n_cols {
                let delta = Rational::from(&f * &rows[r][j]);
                rows[i][j] -= delta;
            }
            let delta = Rational::from(&f * &rhs[r]);
            rhs[i] -= delta;
        }
        pivots.push(c);
        r += 1;
        if r == n_rows {
            break;
        }
    }
    // Zero rows left after elimination must have a zero right-hand side.
    if rhs[r..].iter().any(|v| *v != 0) {
        return None;
    }
    let mut x = vec![Rational::new(); n_cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = rhs[row].clone();
    }
    Some(x)
}
