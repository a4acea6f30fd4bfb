//! Exhaustive monomial search for involutive special conjugators.
//!
//! The family searched is the signed permutation matrices over ℂ and the
//! unit-quaternion monomial matrices (entries in {±1, ±i, ±j, ±k}) over ℍ.
//! Finding a witness certifies strong reality; finding none refutes only
//! within the family — absence is evidence, not proof, and the transcript
//! says so. Enumeration order is deterministic: involutive permutations in
//! lexicographic order, then unit assignments, first hit returned.

use crate::matrices::{Matrix, MatrixC, MatrixH};
use crate::scalars::{GaussianRational, RationalQuaternion, Scalar};

use super::{verify, CertificateC, CertificateH, WitnessError, WitnessField};

pub const SEARCH_SIZE_BOUND: usize = 8;

/// All involutive permutations of {0..n}, lexicographic by image vector.
fn involutive_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<Option<usize>> = vec![None; n];
    fn rec(perm: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = perm.iter().position(Option::is_none) else {
            out.push(perm.iter().map(|x| x.expect("complete")).collect());
            return;
        };
        // fixed point first: that is the lexicographically smallest image
        perm[first] = Some(first);
        rec(perm, out);
        perm[first] = None;
        for partner in first + 1..perm.len() {
            if perm[partner].is_none() {
                perm[first] = Some(partner);
                perm[partner] = Some(first);
                rec(perm, out);
                perm[first] = None;
                perm[partner] = None;
            }
        }
    }
    rec(&mut perm, &mut out);
    out
}

/// Unit assignments compatible with g² = I for a given involutive π:
/// fixed points get s² = 1, two-cycles get s_{π(j)} = s_j⁻¹ with s_j free.
fn involutive_assignments<S: Scalar>(
    pi: &[usize],
    square_roots_of_one: &[S],
    units: &[S],
) -> Vec<Vec<S>> {
    let n = pi.len();
    let mut slots: Vec<(usize, Vec<S>)> = Vec::new();
    for (j, &image) in pi.iter().enumerate() {
        if image == j {
            slots.push((j, square_roots_of_one.to_vec()));
        } else if image > j {
            slots.push((j, units.to_vec()));
        }
    }
    let mut assignments: Vec<Vec<Option<S>>> = vec![vec![None; n]];
    for (slot, choices) in &slots {
        let mut next = Vec::with_capacity(assignments.len() * choices.len());
        for base in &assignments {
            for c in choices {
                let mut a = base.clone();
                a[*slot] = Some(c.clone());
                if pi[*slot] != *slot {
                    a[pi[*slot]] = Some(c.inv().expect("units are invertible"));
                }
                next.push(a);
            }
        }
        assignments = next;
    }
    assignments
        .into_iter()
        .map(|a| {
            a.into_iter()
                .map(|x| x.expect("all slots filled"))
                .collect()
        })
        .collect()
}

fn monomial_matrix<S: Scalar>(pi: &[usize], signs: &[S]) -> Matrix<S> {
    let n = pi.len();
    let mut g = Matrix::zero(n, n);
    for (j, (&target, sign)) in pi.iter().zip(signs).enumerate() {
        g.set(target, j, sign.clone());
    }
    g
}

/// gX = -Xg for the monomial g with g·e_j = s_j·e_{π(j)}, checked entrywise
/// with early exit: s_a·x[a][j] must equal -x[π(a)][π(j)]·s_j.
fn conjugates_monomial<S: Scalar>(x: &Matrix<S>, pi: &[usize], signs: &[S]) -> bool {
    let n = pi.len();
    for a in 0..n {
        for j in 0..n {
            let lhs = signs[a].mul(x.at(a, j));
            let rhs = x.at(pi[a], pi[j]).mul(&signs[j]).neg();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn search<S: WitnessField>(
    x: &Matrix<S>,
    square_roots_of_one: &[S],
    units: &[S],
) -> Result<Option<super::Certificate<S>>, WitnessError> {
    if !x.is_square() {
        return Err(WitnessError::Mismatch("matrix is not square".into()));
    }
    let n = x.rows();
    if n > SEARCH_SIZE_BOUND {
        return Err(WitnessError::SizeBoundExceeded {
            n,
            bound: SEARCH_SIZE_BOUND,
        });
    }
    for pi in involutive_permutations(n) {
        for signs in involutive_assignments(&pi, square_roots_of_one, units) {
            if !conjugates_monomial(x, &pi, &signs) {
                continue;
            }
            let g = monomial_matrix(&pi, &signs);
            let cert = verify(&g, x)?;
            if cert.flags.involutive && cert.flags.special && cert.flags.conjugates_to_negative {
                let mut cert = cert;
                cert.transcript.insert(
                    0,
                    "found by exhaustive search over the signed monomial family".into(),
                );
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// Search signed permutation matrices for an involutive special conjugator
/// of X over ℂ. `Ok(None)` means none exists *in the family*.
pub fn negative_search_oracle_c(x: &MatrixC) -> Result<Option<CertificateC>, WitnessError> {
    let one = GaussianRational::one();
    search(x, &[one.clone(), -&one], &[one.clone(), -&one])
}

/// Search unit-quaternion monomial matrices over ℍ. Two-cycle entries range
/// over all eight units; fixed points must square to 1.
pub fn negative_search_oracle_h(x: &MatrixH) -> Result<Option<CertificateH>, WitnessError> {
    let units: Vec<RationalQuaternion> = vec![
        RationalQuaternion::one(),
        RationalQuaternion::i(),
        RationalQuaternion::j(),
        RationalQuaternion::k(),
        -RationalQuaternion::one(),
        -RationalQuaternion::i(),
        -RationalQuaternion::j(),
        -RationalQuaternion::k(),
    ];
    let roots = vec![RationalQuaternion::one(), -RationalQuaternion::one()];
    search(x, &roots, &units)
}
