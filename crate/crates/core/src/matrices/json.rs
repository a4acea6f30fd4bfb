//! The JSON matrix document:
//! `{ "field": "C"|"H", "n": int, "entries": [[string, ...], ...] }`
//! with entry strings in the canonical scalar forms.

use serde::{Deserialize, Serialize};

use super::{Matrix, MatrixC, MatrixError, MatrixH};
use crate::scalars::{RationalQuaternion, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub field: String,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_matrix_c(m: &MatrixC) -> Self {
        Self::render("C", m)
    }

    pub fn from_matrix_h(m: &MatrixH) -> Self {
        Self::render("H", m)
    }

    fn render<S: Scalar>(field: &str, m: &Matrix<S>) -> Self {
        assert!(m.is_square());
        Self {
            field: field.to_string(),
            n: m.rows(),
            entries: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.at(r, c).render()).collect())
                .collect(),
        }
    }

    fn check_shape(&self) -> Result<(), MatrixError> {
        if self.entries.len() != self.n || self.entries.iter().any(|row| row.len() != self.n) {
            return Err(MatrixError::BadDocument(format!(
                "expected {0}x{0} entries",
                self.n
            )));
        }
        Ok(())
    }

    fn parse_grid<S: Scalar>(&self) -> Result<Matrix<S>, MatrixError> {
        self.check_shape()?;
        let mut rows = Vec::with_capacity(self.n);
        for row in &self.entries {
            let mut out = Vec::with_capacity(self.n);
            for s in row {
                out.push(S::parse(s).map_err(|e| MatrixError::BadDocument(e.to_string()))?);
            }
            rows.push(out);
        }
        Ok(Matrix::from_rows(rows))
    }

    /// Parse as a complex matrix. Fails when the document is tagged `H`.
    pub fn to_matrix_c(&self) -> Result<MatrixC, MatrixError> {
        if self.field != "C" {
            return Err(MatrixError::BadDocument(format!(
                "expected field \"C\", found {:?}",
                self.field
            )));
        }
        self.parse_grid()
    }

    /// Parse as a quaternionic matrix. A document tagged `C` also parses
    /// (complex entries embed into ℍ); anything else fails.
    pub fn to_matrix_h(&self) -> Result<MatrixH, MatrixError> {
        if self.field != "H" && self.field != "C" {
            return Err(MatrixError::BadDocument(format!(
                "unknown field tag {:?}",
                self.field
            )));
        }
        if self.field == "C" {
            let c: MatrixC = self.parse_grid()?;
            return Ok(c.map(RationalQuaternion::from_complex));
        }
        self.parse_grid()
    }
}
