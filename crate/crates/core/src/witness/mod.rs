//! Explicit conjugating certificates: construction and exact verification.
//!
//! A certificate is a matrix g together with the flags that were *verified*
//! against it — conjugation (`gXg⁻¹ = -X`, checked multiplicatively as
//! `gX + Xg = 0` once invertibility is established), involutivity
//! (`g² = I`), and specialness (`det g = 1`, via det or det_ℍ). Every flag
//! in a returned certificate is backed by an exact identity recorded in the
//! transcript; there is no tolerance anywhere.

mod build_c;
mod build_h;
mod scale;
mod search;

pub use build_c::{
    build_real_witness_c, build_strong_witness_c, build_strong_witness_nilpotent_c,
    sign_basis_involution,
};
pub use build_h::{build_real_witness_h, build_strong_witness_h};
pub use scale::{scale_to_special_c, scale_to_special_h};
pub use search::{negative_search_oracle_c, negative_search_oracle_h, SEARCH_SIZE_BOUND};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrices::{det_c, det_h, Matrix, MatrixC, MatrixDocument, MatrixH};
use crate::reality::{RealityError, Reason};
use crate::scalars::{GaussianRational, Rational, RationalQuaternion};
use crate::spectral::{ComplexEmbeddable, SpectralError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("no witness exists: {reason}")]
    NoWitness { reason: Reason },
    #[error(transparent)]
    Reality(#[from] RealityError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("conjugator is singular")]
    SingularConjugator,
    #[error("required root is not representable in the scalar tower: {0}")]
    RootNotRepresentable(String),
    #[error("search size bound exceeded: n = {n}, bound = {bound}")]
    SizeBoundExceeded { n: usize, bound: usize },
    #[error("dimension or field mismatch: {0}")]
    Mismatch(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// The three verified properties of a conjugator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFlags {
    #[serde(rename = "conjugatesToNegative")]
    pub conjugates_to_negative: bool,
    pub involutive: bool,
    pub special: bool,
}

/// A conjugator with its verified flags and the exact checks performed.
#[derive(Debug, Clone)]
pub struct Certificate<S: ComplexEmbeddable> {
    pub g: Matrix<S>,
    pub flags: CertificateFlags,
    pub transcript: Vec<String>,
}

pub type CertificateC = Certificate<GaussianRational>;
pub type CertificateH = Certificate<RationalQuaternion>;

/// Field-specific determinant behavior for verification.
pub trait WitnessField: ComplexEmbeddable {
    /// (is nonzero, is exactly the special value 1, display string)
    fn determinant_report(m: &Matrix<Self>) -> (bool, bool, String);
    fn field_name() -> &'static str;
    fn matrix_document(m: &Matrix<Self>) -> MatrixDocument;
    fn matrix_from_document(doc: &MatrixDocument) -> Result<Matrix<Self>, WitnessError>;
}

impl WitnessField for GaussianRational {
    fn determinant_report(m: &MatrixC) -> (bool, bool, String) {
        let d = det_c(m);
        (!d.is_zero(), d == GaussianRational::one(), d.to_string())
    }
    fn field_name() -> &'static str {
        "C"
    }
    fn matrix_document(m: &MatrixC) -> MatrixDocument {
        MatrixDocument::from_matrix_c(m)
    }
    fn matrix_from_document(doc: &MatrixDocument) -> Result<MatrixC, WitnessError> {
        doc.to_matrix_c()
            .map_err(|e| WitnessError::Mismatch(e.to_string()))
    }
}

impl WitnessField for RationalQuaternion {
    fn determinant_report(m: &MatrixH) -> (bool, bool, String) {
        use num_traits::{One, Zero};
        let d: Rational = det_h(m);
        (!d.is_zero(), d.is_one(), d.to_string())
    }
    fn field_name() -> &'static str {
        "H"
    }
    fn matrix_document(m: &MatrixH) -> MatrixDocument {
        MatrixDocument::from_matrix_h(m)
    }
    fn matrix_from_document(doc: &MatrixDocument) -> Result<MatrixH, WitnessError> {
        doc.to_matrix_h()
            .map_err(|e| WitnessError::Mismatch(e.to_string()))
    }
}

/// Verify a candidate conjugator against X exactly. Errors on a singular g
/// or mismatched dimensions; otherwise returns the three verified flags
/// with a transcript.
pub fn verify<S: WitnessField>(
    g: &Matrix<S>,
    x: &Matrix<S>,
) -> Result<Certificate<S>, WitnessError> {
    if !g.is_square() || !x.is_square() || g.rows() != x.rows() {
        return Err(WitnessError::Mismatch(format!(
            "g is {}x{}, X is {}x{}",
            g.rows(),
            g.cols(),
            x.rows(),
            x.cols()
        )));
    }
    let mut transcript = Vec::new();
    let (nonzero, special, det_str) = S::determinant_report(g);
    if !nonzero {
        return Err(WitnessError::SingularConjugator);
    }
    transcript.push(format!(
        "det(g) = {det_str} over {}: nonzero, special = {special}",
        S::field_name()
    ));
    let conjugates = g.mul(x).add(&x.mul(g)).is_zero();
    transcript.push(format!(
        "gX + Xg = 0 (equivalent to gXg^-1 = -X for invertible g): {}",
        verdict(conjugates)
    ));
    let involutive = g.mul(g).is_identity();
    transcript.push(format!("g^2 = I: {}", verdict(involutive)));
    Ok(Certificate {
        g: g.clone(),
        flags: CertificateFlags {
            conjugates_to_negative: conjugates,
            involutive,
            special,
        },
        transcript,
    })
}

pub fn verify_c(g: &MatrixC, x: &MatrixC) -> Result<CertificateC, WitnessError> {
    verify(g, x)
}

pub fn verify_h(g: &MatrixH, x: &MatrixH) -> Result<CertificateH, WitnessError> {
    verify(g, x)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "verified"
    } else {
        "FAILED"
    }
}

/// Identity certificate for X = 0 (the degenerate case -0 = 0).
pub(crate) fn identity_certificate<S: WitnessField>(
    n: usize,
    note: &str,
) -> Result<Certificate<S>, WitnessError> {
    let id = Matrix::<S>::identity(n);
    let zero = Matrix::<S>::zero(n, n);
    let mut cert = verify(&id, &zero)?;
    cert.transcript.insert(0, note.to_string());
    Ok(cert)
}

/// Require the flags a builder guarantees; anything else is an internal
/// error, since the constructions are proven.
pub(crate) fn expect_flags<S: WitnessField>(
    cert: Certificate<S>,
    involutive: bool,
    context: &str,
) -> Result<Certificate<S>, WitnessError> {
    if !cert.flags.conjugates_to_negative || !cert.flags.special {
        return Err(WitnessError::Internal(format!(
            "{context}: built certificate failed verification: {:?}",
            cert.flags
        )));
    }
    if involutive && !cert.flags.involutive {
        return Err(WitnessError::Internal(format!(
            "{context}: built certificate is not involutive"
        )));
    }
    Ok(cert)
}

/// Certificate JSON document:
/// `{ "g": matrix document, "flags": {...}, "transcript": [strings] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub g: MatrixDocument,
    pub flags: CertificateFlags,
    pub transcript: Vec<String>,
}

impl CertificateDocument {
    pub fn from_certificate<S: WitnessField>(cert: &Certificate<S>) -> Self {
        Self {
            g: S::matrix_document(&cert.g),
            flags: cert.flags,
            transcript: cert.transcript.clone(),
        }
    }

    pub fn to_certificate<S: WitnessField>(&self) -> Result<Certificate<S>, WitnessError> {
        Ok(Certificate {
            g: S::matrix_from_document(&self.g)?,
            flags: self.flags,
            transcript: self.transcript.clone(),
        })
    }
}
