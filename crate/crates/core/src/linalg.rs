//! Exact integer linear algebra for representable multiplicities.
//!
//! Matrices are row-major `Vec<Vec<BigInt>>`. Nothing here touches floating
//! point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
pub fn rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                // Exact: every entry stays a minor of the input.
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// The nonzero invariant factors `d_1 | d_2 | ... | d_r` of the Smith normal
/// form, all positive.
pub fn invariant_factors(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            if let Some((i, j)) = clear_cross(&mut a, t) {
                // A remainder survived; it becomes the new, smaller pivot.
                a.swap(t, i);
                swap_cols(&mut a, t, j);
                continue;
            }
            // The cross is clear. Force the pivot to divide the rest.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    factors
}

/// Product of the nonzero invariant factors, 1 for a zero or empty matrix.
pub fn torsion_multiplicity(matrix: &[Vec<BigInt>]) -> BigInt {
    invariant_factors(matrix).into_iter().product()
}

fn swap_cols(a: &mut [Vec<BigInt>], j: usize, k: usize) {
    if j != k {
        for row in a.iter_mut() {
            row.swap(j, k);
        }
    }
}

fn smallest_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Reduces column `t` below and row `t` right of the pivot by Euclidean
/// division. Returns the position of a nonzero remainder, if any is left.
fn clear_cross(a: &mut [Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let rows = a.len();
    let cols = a[0].len();
    let pivot = a[t][t].clone();
    for i in t + 1..rows {
        if a[i][t].is_zero() {
            continue;
        }
        let q = a[i][t].div_floor(&pivot);
        let (top, rest) = a.split_at_mut(i);
        for (x, y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
            *x -= &q * y;
        }
    }
    for j in t + 1..cols {
        if a[t][j].is_zero() {
            continue;
        }
        let q = a[t][j].div_floor(&pivot);
        for row in a.iter_mut().skip(t) {
            let sub = &q * &row[t];
            row[j] -= sub;
        }
    }
    let col = (t + 1..rows)
        .filter(|&i| !a[i][t].is_zero())
        .map(|i| (i, t))
        .min_by_key(|&(i, j)| a[i][j].abs());
    let row = (t + 1..cols)
        .filter(|&j| !a[t][j].is_zero())
        .map(|j| (t, j))
        .min_by_key(|&(i, j)| a[i][j].abs());
    col.into_iter()
        .chain(row)
        .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
}
