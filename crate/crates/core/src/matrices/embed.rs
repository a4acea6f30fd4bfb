//! The Φ embedding M(n,ℍ) → M(2n,ℂ) and everything derived from it:
//! det_ℍ, tr_ℍ, and quaternionic inversion.
//!
//! Writing A = A₁ + A₂j entrywise,
//!
//! ```text
//! Φ(A) = [  A₁    A₂ ]
//!        [ -Ā₂    Ā₁ ]
//! ```
//!
//! Φ is a unital ring homomorphism, det(Φ(A)) is real and nonnegative, and
//! A is invertible exactly when Φ(A) is. A sign-twisted variant Ψ (similar
//! to Φ by diag(I, -I)) realizes the right-ℂ-linear action of A on ℍⁿ ≅ ℂ²ⁿ
//! under v = a + j·b ↦ (a, b); Jordan chain extraction over ℍ leans on that
//! coordinate system.

use num_traits::{Signed, Zero};

use super::{bareiss, elim, Matrix, MatrixC, MatrixError, MatrixH};
use crate::scalars::{GaussianRational, Rational, RationalQuaternion};

/// Φ(A) for square quaternionic A.
pub fn phi_embed(a: &MatrixH) -> MatrixC {
    assert!(a.is_square(), "phi embedding needs a square matrix");
    let n = a.rows();
    let mut out = MatrixC::zero(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let (z1, z2) = a.at(r, c).complex_split();
            out.set(r, c, z1.clone());
            out.set(r, c + n, z2.clone());
            out.set(r + n, c, -&z2.conjugate());
            out.set(r + n, c + n, z1.conjugate());
        }
    }
    out
}

/// Inverse of [`phi_embed`] on its image; `None` when the block pattern
/// `[[P, Q], [-Q̄, P̄]]` does not hold exactly.
pub fn phi_project(m: &MatrixC) -> Option<MatrixH> {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return None;
    }
    let n = m.rows() / 2;
    for r in 0..n {
        for c in 0..n {
            if *m.at(r + n, c + n) != m.at(r, c).conjugate() {
                return None;
            }
            if *m.at(r + n, c) != -&m.at(r, c + n).conjugate() {
                return None;
            }
        }
    }
    Some(Matrix::from_fn(n, n, |r, c| {
        RationalQuaternion::from_complex_pair(m.at(r, c), m.at(r, c + n))
    }))
}

/// The sign-twisted embedding Ψ(A) = diag(I,-I)·Φ(A)·diag(I,-I) =
/// `[[A₁, -A₂], [Ā₂, Ā₁]]`, which is the matrix of v ↦ A·v on ℂ²ⁿ under
/// the coordinates of [`to_complex_coords`].
pub fn psi_embed(a: &MatrixH) -> MatrixC {
    assert!(a.is_square());
    let n = a.rows();
    let mut out = phi_embed(a);
    for r in 0..n {
        for c in 0..n {
            let x = out.at(r, c + n).clone();
            out.set(r, c + n, -&x);
            let y = out.at(r + n, c).clone();
            out.set(r + n, c, -&y);
        }
    }
    out
}

/// Coordinates of v ∈ ℍⁿ as (a, b) ∈ ℂ²ⁿ with v = a + j·b. Right
/// multiplication by a complex scalar is plain scalar multiplication in
/// these coordinates, so right eigenvector chains transfer verbatim.
pub fn to_complex_coords(v: &[RationalQuaternion]) -> Vec<GaussianRational> {
    let n = v.len();
    let mut out = vec![GaussianRational::zero(); 2 * n];
    for (idx, q) in v.iter().enumerate() {
        out[idx] = GaussianRational::new(q.a0.clone(), q.a1.clone());
        out[idx + n] = GaussianRational::new(q.a2.clone(), -q.a3.clone());
    }
    out
}

/// Inverse of [`to_complex_coords`].
pub fn from_complex_coords(w: &[GaussianRational]) -> Vec<RationalQuaternion> {
    assert!(w.len().is_multiple_of(2));
    let n = w.len() / 2;
    (0..n)
        .map(|idx| {
            let a = &w[idx];
            let b = &w[idx + n];
            RationalQuaternion::new(a.re.clone(), a.im.clone(), b.re.clone(), -b.im.clone())
        })
        .collect()
}

/// det_ℍ(A) := det(Φ(A)); always a nonnegative rational.
pub fn det_h(a: &MatrixH) -> Rational {
    let d = bareiss::det_c(&phi_embed(a));
    assert!(
        d.im.is_zero() && !d.re.is_negative(),
        "det over H must be real and nonnegative; got {d}"
    );
    d.re
}

/// tr_ℍ(A) := tr(Φ(A)) = 2·Σ Re(aᵢᵢ), returned as a Gaussian rational whose
/// imaginary part is always zero.
pub fn tr_h(a: &MatrixH) -> GaussianRational {
    phi_embed(a).trace()
}

/// Quaternionic inverse via the Φ route: invert over ℚ(i) and project back
/// through the block structure.
pub fn inverse_h(a: &MatrixH) -> Result<MatrixH, MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let inv = elim::inverse(&phi_embed(a)).ok_or(MatrixError::Singular)?;
    let projected = phi_project(&inv).expect("inverse of a Phi image has the Phi block structure");
    Ok(projected)
}

/// Quaternionic inverse by direct sided Gaussian elimination. Independent
/// of the Φ route; the two are cross-checked in tests to catch sidedness
/// mistakes.
pub fn inverse_h_direct(a: &MatrixH) -> Result<MatrixH, MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    elim::inverse(a).ok_or(MatrixError::Singular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn q(a0: i64, a1: i64, a2: i64, a3: i64) -> RationalQuaternion {
        RationalQuaternion::new(rat(a0), rat(a1), rat(a2), rat(a3))
    }

    #[test]
    fn phi_of_j_and_i() {
        let mj = Matrix::from_rows(vec![vec![RationalQuaternion::j()]]);
        let e = phi_embed(&mj);
        let gi = GaussianRational::from_i64;
        assert_eq!(
            e,
            MatrixC::from_rows(vec![vec![gi(0), gi(1)], vec![gi(-1), gi(0)]])
        );
        let mi = Matrix::from_rows(vec![vec![RationalQuaternion::i()]]);
        let e = phi_embed(&mi);
        assert_eq!(
            e,
            MatrixC::diagonal(&[GaussianRational::i(), -GaussianRational::i()])
        );
    }

    #[test]
    fn phi_is_homomorphism_on_sample() {
        let a = Matrix::from_rows(vec![
            vec![q(1, 2, 0, -1), q(0, 0, 3, 0)],
            vec![q(2, -1, 1, 1), q(0, 1, 0, 0)],
        ]);
        let b = Matrix::from_rows(vec![
            vec![q(0, 1, 1, 0), q(5, 0, 0, 2)],
            vec![q(1, 1, 1, 1), q(-2, 0, 1, 0)],
        ]);
        assert_eq!(phi_embed(&a.mul(&b)), phi_embed(&a).mul(&phi_embed(&b)));
        assert_eq!(phi_embed(&a.add(&b)), phi_embed(&a).add(&phi_embed(&b)));
        assert_eq!(phi_embed(&a.dagger()), phi_embed(&a).dagger());
        assert!(phi_embed(&MatrixH::identity(2)).is_identity());
        assert_eq!(phi_project(&phi_embed(&a)).unwrap(), a);
    }

    #[test]
    fn det_and_trace() {
        let mj = Matrix::from_rows(vec![vec![RationalQuaternion::j()]]);
        assert_eq!(det_h(&mj), rat(1));
        assert_eq!(det_h(&MatrixH::identity(3)), rat(1));
        let mi = Matrix::from_rows(vec![vec![RationalQuaternion::i()]]);
        assert!(tr_h(&mi).is_zero());
        assert_eq!(tr_h(&MatrixH::identity(3)), GaussianRational::from_i64(6));
        // Jordan block at i with an off-diagonal 1 is trace-free over H
        let x = Matrix::from_rows(vec![
            vec![RationalQuaternion::i(), RationalQuaternion::one()],
            vec![RationalQuaternion::zero(), RationalQuaternion::i()],
        ]);
        assert!(tr_h(&x).is_zero());
    }

    #[test]
    fn det_of_the_weak_reverser_template() {
        // (I_q)j ⊕ [[0, -I_p], [I_p, 0]] is special for every q, p
        for q in 0..3usize {
            for p in 0..3usize {
                if q + 2 * p == 0 {
                    continue;
                }
                let mut blocks = vec![MatrixH::diagonal(&vec![RationalQuaternion::j(); q])];
                if p > 0 {
                    blocks.push(
                        Matrix::antidiag_pair(&MatrixH::identity(p).neg(), &MatrixH::identity(p))
                            .unwrap(),
                    );
                }
                let sigma = Matrix::block_diag(&blocks);
                assert_eq!(det_h(&sigma), rat(1), "q = {q}, p = {p}");
            }
        }
    }

    #[test]
    fn inverse_routes_agree() {
        let a = Matrix::from_rows(vec![
            vec![q(1, 1, 0, 0), q(0, 0, 1, 0)],
            vec![q(0, 0, 0, 1), q(2, 0, 0, 0)],
        ]);
        let via_phi = inverse_h(&a).unwrap();
        let direct = inverse_h_direct(&a).unwrap();
        assert_eq!(via_phi, direct);
        assert!(a.mul(&via_phi).is_identity());
        assert!(via_phi.mul(&a).is_identity());
    }

    #[test]
    fn psi_matches_vector_action() {
        let a = Matrix::from_rows(vec![
            vec![q(1, 2, 3, 4), q(0, -1, 0, 2)],
            vec![q(0, 0, 1, 0), q(5, 0, 0, 0)],
        ]);
        let v = vec![q(1, 1, 1, 1), q(2, 0, -3, 1)];
        let lhs = to_complex_coords(&a.apply(&v));
        let rhs = psi_embed(&a).apply(&to_complex_coords(&v));
        assert_eq!(lhs, rhs);
        assert_eq!(from_complex_coords(&to_complex_coords(&v)), v);
    }
}
