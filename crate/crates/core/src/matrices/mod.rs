//! Dense matrices over the exact scalar towers.
//!
//! `Matrix<S>` is generic over [`Scalar`], which is *not* assumed
//! commutative: every product in this module keeps left and right factors in
//! the order the mathematics dictates, so the same code is sound over ℚ(i)
//! and over the quaternions. Scalar action on vectors is right action, as
//! right eigenvalue theory over ℍ requires; the left action is a separate
//! operation.

mod bareiss;
mod elim;
mod embed;
mod json;

pub use bareiss::{det_c, exact_rank};
pub use elim::{inverse, kernel_basis, rank, rref, SpanTracker};
pub use embed::{
    det_h, from_complex_coords, inverse_h, inverse_h_direct, phi_embed, phi_project, psi_embed,
    to_complex_coords, tr_h,
};
pub use json::MatrixDocument;

use thiserror::Error;

use crate::scalars::{GaussianRational, RationalQuaternion, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("malformed matrix document: {0}")]
    BadDocument(String),
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Matrix over ℚ(i).
pub type MatrixC = Matrix<GaussianRational>;
/// Matrix over the rational quaternions.
pub type MatrixH = Matrix<RationalQuaternion>;

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(n: usize, cols: &[Vec<S>]) -> Self {
        assert!(cols.iter().all(|v| v.len() == n), "column length mismatch");
        Self::from_fn(n, cols.len(), |r, c| cols[c][r].clone())
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(entries: &[S]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                S::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut S {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.at(r, c);
                    if r == c {
                        *e == S::one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Entrywise conjugate.
    pub fn conjugate(&self) -> Self {
        self.map(Scalar::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(Scalar::neg)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "inner dimension mismatch in matrix product"
        );
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.cols {
                    let b = other.at(j, k);
                    if b.is_zero() {
                        continue;
                    }
                    let t = out.at(i, k).add(&a.mul(b));
                    out.set(i, k, t);
                }
            }
        }
        out
    }

    /// Left scalar action `c·A`.
    pub fn scale_left(&self, c: &S) -> Self {
        self.map(|a| c.mul(a))
    }

    /// Right scalar action `A·c`. Distinct from [`Self::scale_left`] because
    /// quaternion entries do not commute with the scalar.
    pub fn scale_right(&self, c: &S) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        let mut t = S::zero();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Apply the matrix to a column vector (right scalar convention is
    /// irrelevant here; entries act from the left as usual).
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (c, vc) in v.iter().enumerate() {
                    let a = self.at(r, c);
                    if !a.is_zero() && !vc.is_zero() {
                        acc = acc.add(&a.mul(vc));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Self::from_fn(rows, cols, |r, c| self.at(r0 + r, c0 + c).clone())
    }

    /// Overwrite the block with upper-left corner `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.at(r, c).clone());
            }
        }
    }

    /// Block diagonal assembly `A₁ ⊕ ⋯ ⊕ A_r` of square blocks.
    pub fn block_diag(blocks: &[Self]) -> Self {
        assert!(
            blocks.iter().all(Matrix::is_square),
            "blocks must be square"
        );
        let n: usize = blocks.iter().map(Matrix::rows).sum();
        let mut out = Self::zero(n, n);
        let mut off = 0;
        for b in blocks {
            out.paste(off, off, b);
            off += b.rows;
        }
        out
    }

    /// The block anti-diagonal matrix `[[0, U], [L, 0]]`; `U` is p×q and `L`
    /// must be q×p so the result is square.
    pub fn antidiag_pair(upper: &Self, lower: &Self) -> Result<Self, MatrixError> {
        if upper.rows != lower.cols || upper.cols != lower.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "antidiag blocks {}x{} and {}x{} do not assemble to a square matrix",
                upper.rows, upper.cols, lower.rows, lower.cols
            )));
        }
        let n = upper.rows + lower.rows;
        let mut out = Self::zero(n, n);
        out.paste(0, upper.rows, upper);
        out.paste(upper.rows, 0, lower);
        Ok(out)
    }

    /// Conjugation `g·self·g⁻¹` given `g` and `g⁻¹`.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        g.mul(self).mul(g_inv)
    }
}

impl<S: Scalar> std::fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}
