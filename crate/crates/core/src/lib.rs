//! Exact classification of real and strongly real adjoint orbits of the
//! special linear groups over the complex numbers and the quaternions.
//!
//! An element X of 𝔰𝔩(n, 𝔽), 𝔽 = ℂ or ℍ, is *real* when gXg⁻¹ = -X for
//! some g ∈ SL(n, 𝔽), and *strongly real* when such a g can be chosen an
//! involution. This crate decides both properties from exact Jordan data,
//! constructs explicit conjugating certificates realizing every positive
//! verdict, and verifies any candidate certificate with zero tolerance.
//!
//! Everything is computed over ℚ, ℚ(i), and the rational quaternions with
//! arbitrary-precision arithmetic; spectra outside ℚ(i) are refused rather
//! than approximated.
//!
//! Module map:
//!
//! - [`scalars`] — rationals, Gaussian rationals, rational quaternions
//! - [`matrices`] — dense exact matrices, sided elimination, the Φ
//!   embedding with det_ℍ and tr_ℍ, fraction-free rank and determinant
//! - [`partitions`] — partitions in exponent form, the derived class sets,
//!   and the P̃ₑ(n) family that obstructs strong reality of nilpotents
//! - [`spectral`] — Jordan blocks, exact Jordan forms over ℂ and ℍ,
//!   eigenvalue-class bookkeeping, the ordered basis
//! - [`reality`] — the classifiers with machine-readable reason codes
//! - [`witness`] — certificate construction, exact verification, central
//!   rescaling, and the exhaustive monomial search oracle

pub mod matrices;
pub mod partitions;
pub mod reality;
pub mod scalars;
pub mod spectral;
pub mod witness;

pub use matrices::{
    det_c, det_h, exact_rank, phi_embed, phi_project, tr_h, Matrix, MatrixC, MatrixDocument,
    MatrixH,
};
pub use partitions::{atlas_csv, atlas_rows, census, enumerate_partitions, Partition};
pub use reality::{
    classify_c, classify_h, is_real_c, is_real_h, is_strongly_real_c, is_strongly_real_h,
    ClassificationReport, Reason, TraceGate,
};
pub use scalars::{GaussianRational, Rational, RationalQuaternion};
pub use spectral::{
    jordan_block, jordan_form_c, jordan_form_h, nilpotent_assembly, ordered_basis, FieldTag,
    JordanData, JordanDataC, JordanDataH, SpectralSpecDocument,
};
pub use witness::{
    build_real_witness_c, build_real_witness_h, build_strong_witness_c, build_strong_witness_h,
    build_strong_witness_nilpotent_c, negative_search_oracle_c, negative_search_oracle_h,
    scale_to_special_c, scale_to_special_h, sign_basis_involution, verify_c, verify_h, Certificate,
    CertificateDocument, CertificateFlags,
};
