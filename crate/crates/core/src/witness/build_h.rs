//! Witness builders over the quaternions.
//!
//! The real witness is g = τ·σ with σ = (I_q)j ⊕ [[0, -I_p], [I_p, 0]] and
//! τ the global alternating sign diagonal: left multiplication by j
//! conjugates a purely imaginary scalar to its negative while fixing the
//! real nilpotent structure. The strong witness is assembled per sector:
//! the alternating diagonal on the zero block, the paired
//! [[0, A], [-A, 0]] template with A = diag(j, -j, …) on each equal-size
//! pair of imaginary-class blocks, and the swap-with-signs template on the
//! ±λ sectors. Involutions over ℍ are automatically special (det_ℍ ≥ 0 and
//! squares to 1), but every determinant is still verified exactly.

use crate::matrices::MatrixH;
use crate::reality::arrangement::expected_form_h;
use crate::reality::{arrange_h, is_real_h, is_strongly_real_h};
use crate::scalars::RationalQuaternion;
use crate::spectral::JordanDataH;

use super::{expect_flags, identity_certificate, verify_h, CertificateH, WitnessError};

fn alternating_signs_h(size: usize) -> Vec<RationalQuaternion> {
    (0..size)
        .map(|j| {
            if j % 2 == 0 {
                RationalQuaternion::one()
            } else {
                -RationalQuaternion::one()
            }
        })
        .collect()
}

/// diag(j, -j, j, …) of the given size.
fn alternating_j(size: usize) -> Vec<RationalQuaternion> {
    (0..size)
        .map(|k| {
            if k % 2 == 0 {
                RationalQuaternion::j()
            } else {
                -RationalQuaternion::j()
            }
        })
        .collect()
}

fn check_input(x: &MatrixH, jd: &JordanDataH) -> Result<(), WitnessError> {
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

/// Conjugating certificate for a real element of 𝔰𝔩(n, ℍ).
pub fn build_real_witness_h(x: &MatrixH, jd: &JordanDataH) -> Result<CertificateH, WitnessError> {
    check_input(x, jd)?;
    if x.is_zero() {
        return identity_certificate(jd.n, "X = 0: the identity conjugates 0 to -0");
    }
    let (real, why) = is_real_h(jd)?;
    if !real {
        return Err(WitnessError::NoWitness { reason: why });
    }
    let arr = arrange_h(jd)
        .ok_or_else(|| WitnessError::Internal("real data must arrange into sectors".into()))?;
    debug_assert_eq!(arr.form, expected_form_h(&arr));
    let q = arr.zero_multiplicity() + arr.imaginary_total();
    let p = arr.pair_side_total();
    let n = jd.n;

    let j_block = MatrixH::diagonal(&vec![RationalQuaternion::j(); q]);
    let sigma = if p == 0 {
        j_block
    } else {
        let swap = MatrixH::antidiag_pair(&MatrixH::identity(p).neg(), &MatrixH::identity(p))
            .expect("square blocks");
        MatrixH::block_diag(&[j_block, swap])
    };
    let tau = MatrixH::diagonal(&alternating_signs_h(n));
    let g_arr = tau.mul(&sigma);

    let transport = arr.transform.mul(jd.base_change());
    let transport_inv = jd.base_change_inv().mul(&arr.transform_inv);
    let g = transport_inv.mul(&g_arr).mul(&transport);
    let mut cert = expect_flags(verify_h(&g, x)?, false, "build_real_witness_h")?;
    cert.transcript.insert(
        0,
        format!("g = τσ with σ = (I_{q})j ⊕ pair swap and τ the alternating sign diagonal"),
    );
    Ok(cert)
}

/// Involutive special certificate for a strongly real element of 𝔰𝔩(n, ℍ):
/// g = g_o ⊕ g₁ ⊕ g₂ assembled per sector.
pub fn build_strong_witness_h(x: &MatrixH, jd: &JordanDataH) -> Result<CertificateH, WitnessError> {
    check_input(x, jd)?;
    if x.is_zero() {
        return identity_certificate(jd.n, "X = 0: the identity is an involutive witness");
    }
    let (strong, why) = is_strongly_real_h(jd)?;
    if !strong {
        return Err(WitnessError::NoWitness { reason: why });
    }
    let arr = arrange_h(jd)
        .ok_or_else(|| WitnessError::Internal("strongly real data must arrange".into()))?;
    debug_assert_eq!(arr.form, expected_form_h(&arr));
    let p = arr.pair_side_total();

    let mut blocks: Vec<MatrixH> = Vec::new();
    // zero sector: the alternating involution reverses any nilpotent
    let p_o = arr.zero_multiplicity();
    if p_o > 0 {
        blocks.push(MatrixH::diagonal(&alternating_signs_h(p_o)));
    }
    // imaginary sectors: pair equal-size blocks adjacently and apply the
    // [[0, A], [-A, 0]] template with A = diag(j, -j, …)
    for sector in &arr.imaginary {
        for &(size, t) in sector.partition.pairs() {
            debug_assert!(t % 2 == 0, "classifier guarantees even multiplicities");
            let a = MatrixH::diagonal(&alternating_j(size));
            for _ in 0..t / 2 {
                let template = MatrixH::antidiag_pair(&a, &a.neg()).expect("square blocks");
                blocks.push(template);
            }
        }
    }
    // ± pair sectors: swap with alternating signs
    if p > 0 {
        let mut side_signs: Vec<RationalQuaternion> = Vec::with_capacity(p);
        for sector in &arr.pairs {
            side_signs.extend(alternating_signs_h(sector.side_multiplicity()));
        }
        let b = MatrixH::diagonal(&side_signs);
        blocks.push(MatrixH::antidiag_pair(&b, &b).expect("square blocks"));
    }
    let g_arr = MatrixH::block_diag(&blocks);

    let transport = arr.transform.mul(jd.base_change());
    let transport_inv = jd.base_change_inv().mul(&arr.transform_inv);
    let g = transport_inv.mul(&g_arr).mul(&transport);
    let mut cert = expect_flags(verify_h(&g, x)?, true, "build_strong_witness_h")?;
    cert.transcript.insert(
        0,
        format!(
            "g = g_o ⊕ g₁ ⊕ g₂: alternating signs on the zero block, paired j-templates on {} imaginary sector(s), signed swap on the ± sectors",
            arr.imaginary.len()
        ),
    );
    Ok(cert)
}
