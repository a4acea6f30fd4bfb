//! Witness builders over ℂ.
//!
//! Builders work in the canonical arrangement and conjugate the result back
//! through the base change; involutivity, specialness and the conjugation
//! identity are all invariant under that transport, so the flags survive.
//!
//! The strong builder assembles g = τ·σ from commuting involutions: σ swaps
//! the ±λ sectors and fixes the nilpotent structure, τ is a sign diagonal
//! reversing every Jordan chain. On the zero block τ carries the sign-basis
//! involution with sign (-1)^l on chains whose part lies in E ∪ O¹ and
//! (-1)^{l+1} on parts in O³, giving det = (-1)^{Σ_{E²} t_η}; when the pair
//! sectors force the opposite sign, one full odd chain is flipped.

use crate::matrices::{det_c, MatrixC};
use crate::partitions::Partition;
use crate::reality::arrangement::expected_form_c;
use crate::reality::{arrange_c, is_real_c, is_strongly_real_c, Reason};
use crate::scalars::GaussianRational;
use crate::spectral::{nilpotent_assembly_c, JordanDataC};

use super::{expect_flags, identity_certificate, verify_c, CertificateC, WitnessError};

/// diag(z, -z, z, …) of the given size.
fn alternating_diag(size: usize, z: &GaussianRational) -> Vec<GaussianRational> {
    (0..size)
        .map(|j| if j % 2 == 0 { z.clone() } else { -z })
        .collect()
}

/// `z` making diag(z, -z, …, ±z) special: 1, i or -1 depending on n mod 4.
fn special_alternating_scalar(n: usize) -> GaussianRational {
    match n % 4 {
        0 | 1 => GaussianRational::one(),
        2 => GaussianRational::i(),
        _ => -GaussianRational::one(),
    }
}

fn check_input(x: &MatrixC, jd: &JordanDataC) -> Result<(), WitnessError> {
    if !x.is_square() || x.rows() != jd.n {
        return Err(WitnessError::Mismatch(format!(
            "matrix is {}x{}, Jordan data says n = {}",
            x.rows(),
            x.cols(),
            jd.n
        )));
    }
    if jd.reconstruct() != *x {
        return Err(WitnessError::Mismatch(
            "Jordan data does not reconstruct the given matrix".into(),
        ));
    }
    Ok(())
}

/// Conjugating certificate for a real element: g = τ·σ with
/// σ = I_{p_o} ⊕ [[0, -I_p], [I_p, 0]] and τ = diag(z, -z, …), z chosen so
/// det τ = 1. Conjugation and specialness are claimed; involutivity is not
/// (τσ generally has order 4).
pub fn build_real_witness_c(x: &MatrixC, jd: &JordanDataC) -> Result<CertificateC, WitnessError> {
    check_input(x, jd)?;
    if x.is_zero() {
        return identity_certificate(jd.n, "X = 0: the identity conjugates 0 to -0");
    }
    let (real, why) = is_real_c(jd)?;
    if !real {
        return Err(WitnessError::NoWitness { reason: why });
    }
    let arr = arrange_c(jd)
        .ok_or_else(|| WitnessError::Internal("real data must arrange into ± pairs".into()))?;
    debug_assert_eq!(arr.form, expected_form_c(&arr));
    let p_o = arr.zero_multiplicity();
    let p = arr.pair_side_total();
    let n = jd.n;

    let sigma = if p == 0 {
        MatrixC::identity(p_o)
    } else {
        let swap = MatrixC::antidiag_pair(&MatrixC::identity(p).neg(), &MatrixC::identity(p))
            .expect("square blocks");
        MatrixC::block_diag(&[MatrixC::identity(p_o), swap])
    };
    let z = special_alternating_scalar(n);
    let tau = MatrixC::diagonal(&alternating_diag(n, &z));
    debug_assert_eq!(det_c(&tau), GaussianRational::one());
    let g_arr = tau.mul(&sigma);

    let transport = arr.transform.mul(jd.base_change());
    let transport_inv = jd.base_change_inv().mul(&arr.transform_inv);
    let g = transport_inv.mul(&g_arr).mul(&transport);
    let mut cert = expect_flags(verify_c(&g, x)?, false, "build_real_witness_c")?;
    cert.transcript.insert(
        0,
        format!(
            "g = τσ in the arrangement O_{p_o} ⊕ (+λ) ⊕ (-λ); τ alternates {z}, σ swaps the pair sectors"
        ),
    );
    Ok(cert)
}

/// Raw signs of the sign-basis involution: sign (-1)^l at chain level l for
/// parts in E ∪ O¹, sign (-1)^{l+1} for parts in O³, listed in the standard
/// (bottom-up) chain basis. Its determinant is (-1)^{Σ_{E²} t_η}.
pub fn sign_basis_involution(d: &Partition) -> MatrixC {
    MatrixC::diagonal(
        &raw_sign_diagonal(d)
            .into_iter()
            .map(GaussianRational::from_i64)
            .collect::<Vec<_>>(),
    )
}

fn raw_sign_diagonal(d: &Partition) -> Vec<i64> {
    let mut signs: Vec<i64> = Vec::with_capacity(d.n());
    for &(size, t) in d.pairs() {
        // base sign of the chain top: parts in O³ use (-1)^{l+1}
        let flip_base = size % 4 == 3;
        for _ in 0..t {
            for j in 0..size {
                let level = size - 1 - j;
                let mut s = if level % 2 == 0 { 1 } else { -1 };
                if flip_base {
                    s = -s;
                }
                signs.push(s);
            }
        }
    }
    signs
}

/// Sign diagonal of the nilpotent involution in the standard chain basis,
/// with overall determinant matching `negative_determinant` (false = +1).
/// `None` when the requested determinant is unreachable, i.e. the partition
/// is even and its forced sign (-1)^{Σ_{E²} t_η} disagrees.
pub(crate) fn nilpotent_sign_diagonal(
    d: &Partition,
    negative_determinant: bool,
) -> Option<Vec<GaussianRational>> {
    let signs: Vec<i64> = raw_sign_diagonal(d);
    let det_negative = signs.iter().filter(|&&s| s < 0).count() % 2 == 1;
    let mut signs = signs;
    if det_negative != negative_determinant {
        // flip one full odd chain: toggles the determinant by (-1)^size
        let odd = d.pairs().iter().find(|&&(size, _)| size % 2 == 1)?;
        let mut offset = 0;
        for &(size, t) in d.pairs() {
            if size == odd.0 {
                for j in signs.iter_mut().skip(offset).take(size) {
                    *j = -*j;
                }
                break;
            }
            offset += size * t;
        }
    }
    Some(signs.into_iter().map(GaussianRational::from_i64).collect())
}

/// Involutive special certificate for the canonical nilpotent N(d, 0),
/// refusing exactly when d ∈ P̃ₑ(n).
pub fn build_strong_witness_nilpotent_c(d: &Partition) -> Result<CertificateC, WitnessError> {
    if d.in_p_tilde_e() {
        return Err(WitnessError::NoWitness {
            reason: Reason::ZeroPartitionObstruction,
        });
    }
    let signs = nilpotent_sign_diagonal(d, false).ok_or_else(|| {
        WitnessError::Internal("determinant 1 must be reachable outside P̃ₑ".into())
    })?;
    let g = MatrixC::diagonal(&signs);
    let x = nilpotent_assembly_c(d, &GaussianRational::zero());
    let mut cert = expect_flags(verify_c(&g, &x)?, true, "build_strong_witness_nilpotent_c")?;
    cert.transcript.insert(
        0,
        format!("sign-basis involution for the nilpotent partition {d}"),
    );
    Ok(cert)
}

/// Involutive special certificate for a strongly real element: g = τ·σ with
/// commuting involutions assembled sector by sector. The zero-block signs
/// are chosen with determinant (-1)^p so that the pair-sector swap (whose
/// determinant is forced to (-1)^p) cancels it.
pub fn build_strong_witness_c(x: &MatrixC, jd: &JordanDataC) -> Result<CertificateC, WitnessError> {
    check_input(x, jd)?;
    if x.is_zero() {
        return identity_certificate(jd.n, "X = 0: the identity is an involutive witness");
    }
    let (strong, why) = is_strongly_real_c(jd)?;
    if !strong {
        return Err(WitnessError::NoWitness { reason: why });
    }
    let arr = arrange_c(jd)
        .ok_or_else(|| WitnessError::Internal("strongly real data must arrange".into()))?;
    debug_assert_eq!(arr.form, expected_form_c(&arr));
    let p_o = arr.zero_multiplicity();
    let p = arr.pair_side_total();
    let zero_partition = arr.zero.clone().unwrap_or_else(Partition::empty);

    let zero_signs = nilpotent_sign_diagonal(&zero_partition, p % 2 == 1).ok_or_else(|| {
        WitnessError::Internal(
            "classifier guarantees the zero-block determinant is reachable".into(),
        )
    })?;
    let tau_zero = MatrixC::diagonal(&zero_signs);
    let one = GaussianRational::one();
    let mut pair_signs: Vec<GaussianRational> = Vec::with_capacity(p);
    for sector in &arr.pairs {
        pair_signs.extend(alternating_diag(sector.side_multiplicity(), &one));
    }
    let tau = MatrixC::block_diag(&[
        tau_zero,
        MatrixC::diagonal(&pair_signs),
        MatrixC::diagonal(&pair_signs),
    ]);
    let sigma = if p == 0 {
        MatrixC::identity(p_o)
    } else {
        let swap = MatrixC::antidiag_pair(&MatrixC::identity(p), &MatrixC::identity(p))
            .expect("square blocks");
        MatrixC::block_diag(&[MatrixC::identity(p_o), swap])
    };
    if sigma.mul(&tau) != tau.mul(&sigma) {
        return Err(WitnessError::Internal("στ = τσ must hold".into()));
    }
    let g_arr = tau.mul(&sigma);

    let transport = arr.transform.mul(jd.base_change());
    let transport_inv = jd.base_change_inv().mul(&arr.transform_inv);
    let g = transport_inv.mul(&g_arr).mul(&transport);
    let mut cert = expect_flags(verify_c(&g, x)?, true, "build_strong_witness_c")?;
    cert.transcript.insert(
        0,
        format!(
            "g = τσ with commuting involutions; zero partition {zero_partition}, pair side total {p}"
        ),
    );
    Ok(cert)
}
