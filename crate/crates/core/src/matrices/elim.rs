//! Gaussian elimination over a division ring.
//!
//! All row operations are *left* multiplications, which makes the routines
//! valid over the quaternions as well as over ℚ(i): the row space is a left
//! module and the null space a right module. Kernel bases returned here span
//! the solution set of `A·x = 0` under right scalar combinations, which is
//! the correct notion for right eigenvector chains.

use super::Matrix;
use crate::scalars::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<S: Scalar>(m: &mut Matrix<S>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut pr = 0;
    for pc in 0..cols {
        let Some(src) = (pr..rows).find(|&r| !m.at(r, pc).is_zero()) else {
            continue;
        };
        if src != pr {
            for c in 0..cols {
                let a = m.at(src, c).clone();
                let b = m.at(pr, c).clone();
                m.set(src, c, b);
                m.set(pr, c, a);
            }
        }
        let inv = m.at(pr, pc).inv().expect("pivot entry is nonzero");
        for c in 0..cols {
            let v = inv.mul(m.at(pr, c));
            m.set(pr, c, v);
        }
        for r in 0..rows {
            if r == pr || m.at(r, pc).is_zero() {
                continue;
            }
            let factor = m.at(r, pc).clone();
            for c in 0..cols {
                let v = m.at(r, c).sub(&factor.mul(m.at(pr, c)));
                m.set(r, c, v);
            }
        }
        pivots.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    pivots
}

/// Rank by elimination. Over ℚ(i) this agrees with the fraction-free
/// [`super::exact_rank`]; the two are kept as independent routes.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Basis of the right null space `{x : A·x = 0}`.
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let cols = m.cols();
    let mut basis = Vec::new();
    let mut pivot_of_col = vec![None; cols];
    for (row, col) in pivots.iter().copied().enumerate() {
        pivot_of_col[col] = Some(row);
    }
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for (col, row) in pivot_of_col.iter().enumerate() {
            if let Some(r) = row {
                v[col] = work.at(*r, free).neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Two-sided inverse via Gauss–Jordan on `[A | I]`, or `None` if singular.
pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.at(r, c).clone()
        } else if c - n == r {
            S::one()
        } else {
            S::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.submatrix(0, n, n, n))
}

/// Incremental independence tracker for *right* linear combinations.
///
/// Vectors join the tracked span exactly when they are not of the form
/// `Σ vᵢ·cᵢ` over the accepted vectors, which is the independence notion for
/// right vector spaces over ℍ (and the usual one over ℚ(i)). Reductions
/// therefore multiply stored vectors by scalars on the right.
pub struct SpanTracker<S> {
    dim: usize,
    // reduced vectors, each with its leading coordinate normalized to 1
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: Scalar> SpanTracker<S> {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [S]) {
        for (lead, row) in &self.rows {
            if v[*lead].is_zero() {
                continue;
            }
            let factor = v[*lead].clone();
            for (vc, rc) in v.iter_mut().zip(row) {
                *vc = vc.sub(&rc.mul(&factor));
            }
        }
    }

    /// Returns true when `v` was independent of the current span (and is now
    /// part of it).
    pub fn insert(&mut self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[lead].inv().expect("leading entry nonzero");
        for entry in &mut w {
            *entry = entry.mul(&inv);
        }
        // keep the stored set fully reduced so single-pass reduction stays
        // sound: clear the new lead coordinate from every existing row
        for (_, row) in &mut self.rows {
            if row[lead].is_zero() {
                continue;
            }
            let factor = row[lead].clone();
            for c in 0..self.dim {
                row[c] = row[c].sub(&w[c].mul(&factor));
            }
        }
        self.rows.push((lead, w));
        self.rows.sort_by_key(|(l, _)| *l);
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }
}
