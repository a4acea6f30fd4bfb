//! Jordan form over the quaternions.
//!
//! The right-ℂ-linear picture Ψ(X) on ℂ²ⁿ carries the whole spectrum:
//! eigenvalues come in conjugate pairs with matching partitions, each
//! quaternionic class appearing once with its nonnegative-imaginary-part
//! representative. For a non-real class the Ψ-chains at the representative
//! transfer verbatim to right-eigenvector chains in ℍⁿ. For a real class
//! the shift X - λI is itself right-ℍ-linear, so chains are built directly
//! by quaternionic elimination; the Ψ-partition must then show every
//! multiplicity doubled, and any mismatch between the two routes is
//! reported as a bookkeeping violation rather than trusted silently.

use num_traits::{Signed, Zero};

use super::jordan_c::{chain_columns, complex_class_chains, generalized_chains};
use super::{EigenvalueClass, FieldTag, JordanDataH, SpectralDatum, SpectralError};
use crate::matrices::{from_complex_coords, psi_embed, Matrix, MatrixH};
use crate::partitions::Partition;
use crate::scalars::{GaussianRational, RationalQuaternion};

pub fn jordan_form_h(
    x: &MatrixH,
    hints: &[GaussianRational],
) -> Result<JordanDataH, SpectralError> {
    if !x.is_square() {
        return Err(SpectralError::NotSquare);
    }
    let n = x.rows();
    let psi = psi_embed(x);
    let mut psi_hints: Vec<GaussianRational> = Vec::with_capacity(hints.len() * 2);
    for h in hints {
        psi_hints.push(h.clone());
        let conj = h.conjugate();
        if !psi_hints.contains(&conj) {
            psi_hints.push(conj);
        }
    }
    let per_class = complex_class_chains(&psi, &psi_hints)?;
    let partition_at = |rep: &GaussianRational| {
        per_class
            .iter()
            .find(|(l, _)| l == rep)
            .map(|(_, set)| set.partition.clone())
    };

    let mut data = Vec::new();
    let mut columns: Vec<Vec<RationalQuaternion>> = Vec::new();
    for (lambda, set) in &per_class {
        if lambda.im.is_negative() {
            continue;
        }
        if lambda.im.is_positive() {
            // non-real class: the conjugate must carry the same partition
            match partition_at(&lambda.conjugate()) {
                Some(p) if p == set.partition => {}
                other => {
                    return Err(SpectralError::DoublingViolation {
                        class: lambda.to_string(),
                        detail: format!(
                            "conjugate eigenvalue carries partition {other:?}, expected {}",
                            set.partition
                        ),
                    });
                }
            }
            data.push(SpectralDatum {
                class: EigenvalueClass::new(FieldTag::H, lambda.clone()),
                partition: set.partition.clone(),
            });
            for col in chain_columns(&set.chains) {
                columns.push(from_complex_coords(&col));
            }
        } else {
            // real class: Ψ shows every multiplicity doubled
            let halved_pairs: Result<Vec<(usize, usize)>, ()> = set
                .partition
                .pairs()
                .iter()
                .map(|&(size, t)| {
                    if t % 2 == 0 {
                        Ok((size, t / 2))
                    } else {
                        Err(())
                    }
                })
                .collect();
            let halved = halved_pairs
                .ok()
                .and_then(|pairs| Partition::new(pairs).ok())
                .ok_or_else(|| SpectralError::DoublingViolation {
                    class: lambda.to_string(),
                    detail: format!(
                        "real-class partition {} does not have doubled multiplicities",
                        set.partition
                    ),
                })?;
            let shifted = shift_h(x, lambda);
            let hset = generalized_chains(&shifted, halved.n()).ok_or_else(|| {
                SpectralError::DoublingViolation {
                    class: lambda.to_string(),
                    detail: "quaternionic chain construction failed".into(),
                }
            })?;
            if hset.partition != halved {
                return Err(SpectralError::DoublingViolation {
                    class: lambda.to_string(),
                    detail: format!(
                        "direct quaternionic partition {} disagrees with halved Ψ partition {}",
                        hset.partition, halved
                    ),
                });
            }
            data.push(SpectralDatum {
                class: EigenvalueClass::new(FieldTag::H, lambda.clone()),
                partition: halved,
            });
            columns.extend(chain_columns(&hset.chains));
        }
    }

    let p = Matrix::from_columns(n, &columns);
    let base_change = crate::matrices::inverse(&p).ok_or_else(|| {
        SpectralError::InvalidSpec("quaternionic chain vectors do not form a basis".into())
    })?;
    let jd = JordanDataH::new(FieldTag::H, n, data, base_change)?;
    debug_assert_eq!(
        jd.canonical_form(),
        x.conjugate_by(jd.base_change(), jd.base_change_inv()),
        "exact quaternionic reconstruction"
    );
    Ok(jd)
}

fn shift_h(x: &MatrixH, lambda: &GaussianRational) -> MatrixH {
    debug_assert!(lambda.im.is_zero(), "direct chains only for real classes");
    let l = RationalQuaternion::from_complex(lambda);
    let mut m = x.clone();
    for i in 0..x.rows() {
        let v = m.at(i, i) - &l;
        m.set(i, i, v);
    }
    m
}
