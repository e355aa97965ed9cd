//! Exact linear algebra over the rationals, sized for the small dense
//! systems that show up here (dimensions rarely exceed a dozen).

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

pub(crate) fn rational_from_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn rational_row(row: &[i64]) -> Vec<Rational> {
    row.iter().map(|&v| rational_from_i64(v)).collect()
}

/// Reduced row echelon form in place. Returns the pivot column of each
/// processed row.
fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for j in 0..cols {
                    let t = &mat[r][j] * &factor;
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Solves `A x = b` for a (possibly non-square) matrix with full column
/// rank. Returns `None` when the system is inconsistent or the solution
/// is not unique.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    if rows != b.len() {
        return None;
    }
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    // Inconsistent if some pivot lands in the augmented column.
    if pivots.contains(&cols) {
        return None;
    }
    if pivots.len() != cols {
        return None; // rank-deficient: no unique solution
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][cols].clone();
    }
    Some(x)
}

/// Inverts a square rational matrix; `None` if singular.
pub(crate) fn invert(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            for j in 0..n {
                v.push(if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Inverts an integer matrix of determinant ±1; `None` if singular or
/// the inverse is not integral.
pub(crate) fn invert_unimodular(a: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let rows: Vec<Vec<Rational>> = a.iter().map(|r| rational_row(r)).collect();
    let inv = invert(&rows)?;
    let mut out = Vec::with_capacity(inv.len());
    for row in inv {
        let mut v = Vec::with_capacity(row.len());
        for x in row {
            if !x.is_integer() {
                return None;
            }
            v.push(i64::try_from(x.to_integer()).ok()?);
        }
        out.push(v);
    }
    Some(out)
}

/// Exact determinant of an integer matrix (fraction-free Bareiss).
pub(crate) fn det_bigint(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

pub(crate) fn dot_ii(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
