//! Central rescaling into the special linear group: g ↦ αg with
//! det(αg) = 1. The conjugation action is unchanged since α is central.
//! Refuses when the required root leaves the scalar tower.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::matrices::{det_c, det_h, MatrixC, MatrixH};
use crate::scalars::{GaussianRational, Rational, RationalQuaternion};
use crate::spectral::gaussian_nth_root;

use super::WitnessError;

/// Over ℂ: α must satisfy αⁿ = det(g)⁻¹ in ℚ(i).
pub fn scale_to_special_c(g: &MatrixC) -> Result<MatrixC, WitnessError> {
    if !g.is_square() {
        return Err(WitnessError::Mismatch("matrix is not square".into()));
    }
    let det = det_c(g);
    if det.is_zero() {
        return Err(WitnessError::SingularConjugator);
    }
    if det == GaussianRational::one() {
        return Ok(g.clone());
    }
    let n = g.rows();
    let target = det.inverse().expect("nonzero determinant");
    let alpha = gaussian_nth_root(&target, n).ok_or_else(|| {
        WitnessError::RootNotRepresentable(format!("no n-th root of {target} in Q(i) for n = {n}"))
    })?;
    Ok(g.scale_left(&alpha))
}

/// Positive rational k-th root, if the numerator and denominator are both
/// perfect k-th powers.
fn rational_nth_root(r: &Rational, k: usize) -> Option<Rational> {
    if !r.is_positive() {
        return None;
    }
    let root_of = |x: &BigInt| -> Option<BigInt> {
        let root = x.nth_root(k as u32);
        (num_traits::pow::pow(root.clone(), k) == *x).then_some(root)
    };
    let numer = root_of(r.numer())?;
    let denom = root_of(r.denom())?;
    Some(Rational::new(numer, denom))
}

/// Over ℍ: det_ℍ(g) > 0 and its positive real (2n)-th root must be
/// rational; α is that root's reciprocal, real hence central.
pub fn scale_to_special_h(g: &MatrixH) -> Result<MatrixH, WitnessError> {
    if !g.is_square() {
        return Err(WitnessError::Mismatch("matrix is not square".into()));
    }
    let det = det_h(g);
    if det.is_zero() {
        return Err(WitnessError::SingularConjugator);
    }
    if det.is_one() {
        return Ok(g.clone());
    }
    let n = g.rows();
    let target = det.recip();
    let alpha = rational_nth_root(&target, 2 * n).ok_or_else(|| {
        WitnessError::RootNotRepresentable(format!(
            "no rational (2n)-th root of {target} for n = {n}"
        ))
    })?;
    let alpha_q =
        RationalQuaternion::new(alpha, Rational::zero(), Rational::zero(), Rational::zero());
    Ok(g.scale_left(&alpha_q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_i64(n)
    }

    #[test]
    fn scales_doubled_identity() {
        let g = MatrixC::diagonal(&[gi(2), gi(2)]);
        let scaled = scale_to_special_c(&g).unwrap();
        assert_eq!(scaled, MatrixC::identity(2));
    }

    #[test]
    fn special_input_unchanged() {
        let g = MatrixC::diagonal(&[gi(1), gi(1)]);
        assert_eq!(scale_to_special_c(&g).unwrap(), g);
    }

    #[test]
    fn negative_determinant_needs_i() {
        // diag(1,-1): det = -1, n = 2, α = ±i gives diag(i,-i) up to sign
        let g = MatrixC::diagonal(&[gi(1), gi(-1)]);
        let scaled = scale_to_special_c(&g).unwrap();
        assert_eq!(det_c(&scaled), gi(1));
        let expected = MatrixC::diagonal(&[GaussianRational::i(), -GaussianRational::i()]);
        let also = expected.neg();
        assert!(scaled == expected || scaled == also);
    }

    #[test]
    fn refuses_unrepresentable_roots() {
        // det = 2, n = 2: needs √(1/2) which is not in Q(i)
        let g = MatrixC::diagonal(&[gi(2), gi(1)]);
        assert!(matches!(
            scale_to_special_c(&g),
            Err(WitnessError::RootNotRepresentable(_))
        ));
    }

    #[test]
    fn quaternionic_scaling() {
        let g = MatrixH::diagonal(&[
            RationalQuaternion::from_i64(2),
            RationalQuaternion::from_i64(2),
        ]);
        // det_H = 16, 2n = 4, root 2: α = 1/2
        let scaled = scale_to_special_h(&g).unwrap();
        assert!(scaled.is_identity());
        // det_H(j-diagonal) is already 1
        let g = MatrixH::diagonal(&[RationalQuaternion::j()]);
        assert_eq!(scale_to_special_h(&g).unwrap(), g);
        // det_H = 4 for diag(2) at n=1: needs 4^(1/2) = 2: α = 1/2... wait
        // 2n = 2, root of 1/4 is 1/2, fine
        let g = MatrixH::diagonal(&[RationalQuaternion::from_i64(2)]);
        assert!(scale_to_special_h(&g).unwrap().is_identity());
        // det_H = 2 for diag(1+i)... norm 2: no rational square root of 1/2
        let g = MatrixH::diagonal(&[RationalQuaternion::new(rat(1), rat(1), rat(0), rat(0))]);
        assert!(matches!(
            scale_to_special_h(&g),
            Err(WitnessError::RootNotRepresentable(_))
        ));
    }
}
