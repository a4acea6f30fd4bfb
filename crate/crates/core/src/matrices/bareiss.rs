//! Fraction-free determinant and rank over ℚ(i).
//!
//! Rows are cleared to Gaussian-integer form first, then the Bareiss
//! one-step elimination keeps every intermediate entry integral, so the
//! exact divisions never produce fractions. Pivoting searches the whole
//! remaining submatrix, so rank-deficient input is handled.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::MatrixC;
use crate::scalars::{GaussianRational, Rational};

/// Clear denominators row by row; returns the integral matrix and the
/// product of the row multipliers.
fn clear_rows(m: &MatrixC) -> (MatrixC, Rational) {
    let mut out = m.clone();
    let mut multiplier = Rational::one();
    for r in 0..m.rows() {
        let mut l = BigInt::one();
        for c in 0..m.cols() {
            let e = m.at(r, c);
            l = l.lcm(e.re.denom());
            l = l.lcm(e.im.denom());
        }
        if !l.is_one() {
            let lr = Rational::from_integer(l.clone());
            for c in 0..m.cols() {
                let e = out.at(r, c);
                out.set(r, c, GaussianRational::new(&e.re * &lr, &e.im * &lr));
            }
            multiplier *= lr;
        }
    }
    (out, multiplier)
}

fn exact_div(num: &GaussianRational, den: &GaussianRational) -> GaussianRational {
    num / den
}

/// Bareiss elimination; returns (rank, determinant of the integral matrix).
/// The determinant component is meaningful only for square input.
fn bareiss(m: &MatrixC) -> (usize, GaussianRational) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let steps = rows.min(cols);
    let mut prev = GaussianRational::one();
    let mut sign_flip = false;
    let mut rank = 0;
    for k in 0..steps {
        // full pivot search over the remaining submatrix
        let pivot = (k..rows)
            .flat_map(|r| (k..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !a.at(r, c).is_zero());
        let Some((pr, pc)) = pivot else {
            break;
        };
        if pr != k {
            for c in 0..cols {
                let x = a.at(pr, c).clone();
                let y = a.at(k, c).clone();
                a.set(pr, c, y);
                a.set(k, c, x);
            }
            sign_flip = !sign_flip;
        }
        if pc != k {
            for r in 0..rows {
                let x = a.at(r, pc).clone();
                let y = a.at(r, k).clone();
                a.set(r, pc, y);
                a.set(r, k, x);
            }
            sign_flip = !sign_flip;
        }
        rank += 1;
        let akk = a.at(k, k).clone();
        for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                let num = &(a.at(i, j) * &akk) - &(a.at(i, k) * a.at(k, j));
                a.set(i, j, exact_div(&num, &prev));
            }
            a.set(i, k, GaussianRational::zero());
        }
        prev = akk;
    }
    let mut det = if rank == steps && rows == cols {
        a.at(rows.saturating_sub(1), cols.saturating_sub(1)).clone()
    } else {
        GaussianRational::zero()
    };
    if rows == 0 {
        det = GaussianRational::one();
    }
    if sign_flip {
        det = -det;
    }
    (rank, det)
}

/// Rank over ℚ(i) by fraction-free elimination.
pub fn exact_rank(m: &MatrixC) -> usize {
    let (cleared, _) = clear_rows(m);
    bareiss(&cleared).0
}

/// Exact determinant over ℚ(i).
pub fn det_c(m: &MatrixC) -> GaussianRational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return GaussianRational::one();
    }
    let (cleared, multiplier) = clear_rows(m);
    let (_, det) = bareiss(&cleared);
    let scale = GaussianRational::new(multiplier.recip(), Rational::zero());
    &det * &scale
}
