//! Jordan structure: block builders, exact Jordan forms over ℚ(i) and (via
//! the Φ/Ψ embedding) over the quaternions, eigenvalue-class bookkeeping,
//! and the ordered basis that makes reversers block triangular.
//!
//! Spectra must lie in ℚ(i). Eigenvalues are found from the characteristic
//! polynomial by an exact Gaussian-integer divisor search, helped by an
//! optional user hint; anything that fails to split is refused, never
//! approximated.

mod basis;
mod charpoly;
mod gauss_int;
mod jordan_c;
mod jordan_h;
mod roots;
mod spec_doc;

pub use basis::{ordered_basis, OrderedJordanBasis};
pub use charpoly::char_poly;
pub use gauss_int::gaussian_nth_root;
pub use jordan_c::jordan_form_c;
pub use jordan_h::jordan_form_h;
pub use spec_doc::{SpectralSpecDocument, SpectralSpecEntry};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrices::{inverse, Matrix, MatrixC, MatrixH};
use crate::partitions::Partition;
use crate::scalars::{GaussianRational, RationalQuaternion, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("spectrum does not split over Q(i): {remaining_degree} characteristic degrees remain unresolved (a --hint may help, or the spectrum genuinely lies outside Q(i))")]
    NonSplittingSpectrum { remaining_degree: usize },
    #[error("hint {value} is not an eigenvalue")]
    DefectiveHint { value: String },
    #[error("quaternionic class bookkeeping violated at class {class}: {detail}")]
    DoublingViolation { class: String, detail: String },
    #[error("invalid spectral specification: {0}")]
    InvalidSpec(String),
}

/// Which scalar tower a spectral object lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    C,
    H,
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::C => write!(f, "C"),
            FieldTag::H => write!(f, "H"),
        }
    }
}

/// An eigenvalue over ℂ, or an eigenvalue similarity class over ℍ
/// represented by its unique complex member with nonnegative imaginary
/// part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EigenvalueClass {
    rep: GaussianRational,
    field: FieldTag,
}

impl EigenvalueClass {
    /// Over ℍ the representative is canonicalized to nonnegative imaginary
    /// part; over ℂ it is taken as given.
    pub fn new(field: FieldTag, rep: GaussianRational) -> Self {
        use num_traits::Signed;
        let rep = match field {
            FieldTag::C => rep,
            FieldTag::H => {
                if rep.im.is_negative() {
                    rep.conjugate()
                } else {
                    rep
                }
            }
        };
        Self { rep, field }
    }

    pub fn rep(&self) -> &GaussianRational {
        &self.rep
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Real part zero (includes the zero class).
    pub fn is_purely_imaginary(&self) -> bool {
        use num_traits::Zero;
        self.rep.re.is_zero()
    }
}

/// One eigenvalue class with its Jordan structure. The multiplicity is the
/// weight of the partition, so the two can never disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralDatum {
    pub class: EigenvalueClass,
    pub partition: Partition,
}

impl SpectralDatum {
    pub fn multiplicity(&self) -> usize {
        self.partition.n()
    }
}

/// Complete Jordan data: spectral data with pairwise distinct classes in
/// canonical order, plus the base change `g` with `g·X·g⁻¹` equal to the
/// assembled canonical form exactly.
#[derive(Debug, Clone)]
pub struct JordanData<S: Scalar> {
    pub field: FieldTag,
    pub n: usize,
    pub data: Vec<SpectralDatum>,
    base_change: Matrix<S>,
    base_change_inv: Matrix<S>,
}

pub type JordanDataC = JordanData<GaussianRational>;
pub type JordanDataH = JordanData<RationalQuaternion>;

/// Scalars that contain ℚ(i); lets canonical forms be assembled generically.
pub trait ComplexEmbeddable: Scalar {
    fn embed_complex(z: &GaussianRational) -> Self;
}

impl ComplexEmbeddable for GaussianRational {
    fn embed_complex(z: &GaussianRational) -> Self {
        z.clone()
    }
}

impl ComplexEmbeddable for RationalQuaternion {
    fn embed_complex(z: &GaussianRational) -> Self {
        RationalQuaternion::from_complex(z)
    }
}

impl<S: ComplexEmbeddable> JordanData<S> {
    /// Construct from sorted-or-not data; sorts canonically and validates.
    pub fn new(
        field: FieldTag,
        n: usize,
        mut data: Vec<SpectralDatum>,
        base_change: Matrix<S>,
    ) -> Result<Self, SpectralError> {
        data.sort_by(|a, b| a.class.rep().cmp(b.class.rep()));
        for pair in data.windows(2) {
            if pair[0].class == pair[1].class {
                return Err(SpectralError::InvalidSpec(format!(
                    "class {} listed twice",
                    pair[0].class.rep()
                )));
            }
        }
        let total: usize = data.iter().map(SpectralDatum::multiplicity).sum();
        if total != n {
            return Err(SpectralError::InvalidSpec(format!(
                "multiplicities sum to {total}, expected {n}"
            )));
        }
        let base_change_inv = inverse(&base_change)
            .ok_or_else(|| SpectralError::InvalidSpec("base change matrix is singular".into()))?;
        Ok(Self {
            field,
            n,
            data,
            base_change,
            base_change_inv,
        })
    }

    /// Jordan data of a canonical form itself (identity base change).
    pub fn canonical(
        field: FieldTag,
        n: usize,
        data: Vec<SpectralDatum>,
    ) -> Result<Self, SpectralError> {
        Self::new(field, n, data, Matrix::identity(n))
    }

    /// `g` with `g·X·g⁻¹ = canonical_form`.
    pub fn base_change(&self) -> &Matrix<S> {
        &self.base_change
    }

    pub fn base_change_inv(&self) -> &Matrix<S> {
        &self.base_change_inv
    }

    /// The assembled canonical form: classes in canonical order, block
    /// sizes decreasing inside each class.
    pub fn canonical_form(&self) -> Matrix<S> {
        let blocks: Vec<Matrix<S>> = self
            .data
            .iter()
            .flat_map(|d| {
                let lambda = S::embed_complex(d.class.rep());
                d.partition
                    .flatten()
                    .into_iter()
                    .map(move |size| jordan_block(size, &lambda))
            })
            .collect();
        if blocks.is_empty() {
            Matrix::zero(0, 0)
        } else {
            Matrix::block_diag(&blocks)
        }
    }

    /// Reconstruct the original matrix `X = g⁻¹·F·g`.
    pub fn reconstruct(&self) -> Matrix<S> {
        self.canonical_form()
            .conjugate_by(&self.base_change_inv, &self.base_change)
    }

    pub fn datum_for_zero(&self) -> Option<&SpectralDatum> {
        self.data.iter().find(|d| d.class.is_zero())
    }

    pub fn datum_for(&self, rep: &GaussianRational) -> Option<&SpectralDatum> {
        self.data.iter().find(|d| d.class.rep() == rep)
    }

    /// True when every partition is `[1^m]`.
    pub fn is_semisimple(&self) -> bool {
        self.data
            .iter()
            .all(|d| d.partition.pairs().iter().all(|&(size, _)| size == 1))
    }
}

impl JordanDataC {
    /// Trace of the underlying matrix, out of the spectral data.
    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for d in &self.data {
            let m = GaussianRational::new(
                crate::scalars::rat(d.multiplicity() as i64),
                crate::scalars::rat(0),
            );
            t = &t + &(d.class.rep() * &m);
        }
        t
    }
}

impl JordanDataH {
    /// tr_ℍ out of the spectral data: `2·Σ Re(λ)·m`.
    pub fn trace_h(&self) -> GaussianRational {
        let mut re = crate::scalars::rat(0);
        for d in &self.data {
            re += &d.class.rep().re * crate::scalars::rat(2 * d.multiplicity() as i64);
        }
        GaussianRational::new(re, crate::scalars::rat(0))
    }
}

/// The Jordan block J(m, λ): λ on the diagonal, 1 on the superdiagonal.
pub fn jordan_block<S: Scalar>(size: usize, lambda: &S) -> Matrix<S> {
    Matrix::from_fn(size, size, |r, c| {
        if r == c {
            lambda.clone()
        } else if c == r + 1 {
            S::one()
        } else {
            S::zero()
        }
    })
}

/// `J(d(n), λ) = ⊕ J(dⱼ, λ)`, blocks largest part first, multiplicity-many
/// copies each. With λ = 0 this is the nilpotent N(d(n), 0).
pub fn nilpotent_assembly<S: Scalar>(d: &Partition, lambda: &S) -> Matrix<S> {
    let blocks: Vec<Matrix<S>> = d
        .flatten()
        .into_iter()
        .map(|size| jordan_block(size, lambda))
        .collect();
    if blocks.is_empty() {
        Matrix::zero(0, 0)
    } else {
        Matrix::block_diag(&blocks)
    }
}

/// Convenience wrappers fixing the scalar type.
pub fn jordan_block_c(size: usize, lambda: &GaussianRational) -> MatrixC {
    jordan_block(size, lambda)
}

pub fn nilpotent_assembly_c(d: &Partition, lambda: &GaussianRational) -> MatrixC {
    nilpotent_assembly(d, lambda)
}

pub fn nilpotent_assembly_h(d: &Partition, lambda: &RationalQuaternion) -> MatrixH {
    nilpotent_assembly(d, lambda)
}
