//! Exact Jordan form over ℚ(i), plus the generic chain engine shared with
//! the quaternionic route.
//!
//! Block counts come from the rank sequence of (X - λI)^k; generalized
//! eigenvector chains are built top-down from kernel complements with a
//! deterministic pivot choice (lowest kernel-basis index first), so the
//! base change is reproducible across runs. Reconstruction is asserted
//! exactly before the data is returned.

use super::charpoly::char_poly;
use super::roots::monic_gaussian_roots;
use super::{EigenvalueClass, FieldTag, JordanDataC, SpectralDatum, SpectralError};
use crate::matrices::{inverse, kernel_basis, Matrix, MatrixC, SpanTracker};
use crate::partitions::Partition;
use crate::scalars::{GaussianRational, Scalar};

/// Chains for one eigenvalue: `chains[b]` lists the b-th chain top-down,
/// i.e. `[v, M·v, M²·v, …]` with `M = X - λI`.
pub(crate) struct ChainSet<S> {
    pub partition: Partition,
    pub chains: Vec<Vec<Vec<S>>>,
}

/// Build generalized eigenvector chains of `m` (already shifted by λ) whose
/// total length is `multiplicity`. Works over any division-ring scalar;
/// independence is right-linear as eigentheory over ℍ requires.
pub(crate) fn generalized_chains<S: Scalar>(
    m: &Matrix<S>,
    multiplicity: usize,
) -> Option<ChainSet<S>> {
    let n = m.rows();
    // kernels of successive powers, index k = 0, 1, ...
    let mut kernels: Vec<Vec<Vec<S>>> = vec![Vec::new()];
    let mut power = Matrix::identity(n);
    loop {
        power = power.mul(m);
        let kernel = kernel_basis(&power);
        let nullity = kernel.len();
        let stalled = nullity == kernels.last().expect("nonempty").len();
        kernels.push(kernel);
        if nullity >= multiplicity {
            if nullity > multiplicity {
                return None;
            }
            break;
        }
        if stalled {
            // nullity plateaued below the expected multiplicity
            return None;
        }
    }
    let height = kernels.len() - 1;

    // parts of the partition: #blocks of size >= k is nullity_k - nullity_{k-1}
    let mut flat_parts = Vec::new();
    for k in 1..=height {
        let at_least_k = kernels[k].len() - kernels[k - 1].len();
        let at_least_k1 = if k < height {
            let next = kernel_len_checked(&kernels, k + 1);
            next - kernels[k].len()
        } else {
            0
        };
        for _ in 0..(at_least_k.saturating_sub(at_least_k1)) {
            flat_parts.push(k);
        }
    }
    let partition = Partition::from_parts(flat_parts).ok()?;
    if partition.n() != multiplicity {
        return None;
    }

    let mut chains: Vec<Vec<Vec<S>>> = Vec::new();
    for k in (1..=height).rev() {
        // extend every existing chain down one level
        for chain in &mut chains {
            let last = chain.last().expect("chains are nonempty");
            chain.push(m.apply(last));
        }
        let mut tracker = SpanTracker::new(n);
        for v in &kernels[k - 1] {
            tracker.insert(v);
        }
        for chain in &chains {
            let ok = tracker.insert(chain.last().expect("nonempty"));
            debug_assert!(ok, "pushed-down chain vectors stay independent");
        }
        let blocks_ge_k = kernels[k].len() - kernels[k - 1].len();
        let mut need = blocks_ge_k - chains.len();
        for v in &kernels[k] {
            if need == 0 {
                break;
            }
            if tracker.insert(v) {
                chains.push(vec![v.clone()]);
                need -= 1;
            }
        }
        if need != 0 {
            return None;
        }
    }
    debug_assert_eq!(
        chains.iter().map(Vec::len).sum::<usize>(),
        multiplicity,
        "chain lengths exhaust the multiplicity"
    );
    Some(ChainSet { partition, chains })
}

fn kernel_len_checked<S>(kernels: &[Vec<Vec<S>>], k: usize) -> usize {
    kernels
        .get(k)
        .map_or_else(|| kernels.last().map_or(0, Vec::len), Vec::len)
}

/// Columns of the base-change inverse for one class: chains ordered by
/// height descending, each chain bottom-up so the block reads J(h, λ).
pub(crate) fn chain_columns<S: Clone>(chains: &[Vec<Vec<S>>]) -> Vec<Vec<S>> {
    let mut order: Vec<usize> = (0..chains.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(chains[i].len()));
    let mut cols = Vec::new();
    for idx in order {
        for v in chains[idx].iter().rev() {
            cols.push(v.clone());
        }
    }
    cols
}

/// Exact Jordan form over ℚ(i). Every eigenvalue must lie in ℚ(i), found
/// from the characteristic polynomial via hint plus divisor search.
pub fn jordan_form_c(
    x: &MatrixC,
    hints: &[GaussianRational],
) -> Result<JordanDataC, SpectralError> {
    let (data, base_change) = jordan_with_chains(x, hints)?;
    let jd = JordanDataC::new(FieldTag::C, x.rows(), data, base_change)?;
    debug_assert_eq!(
        jd.canonical_form(),
        x.conjugate_by(jd.base_change(), jd.base_change_inv()),
        "exact reconstruction"
    );
    Ok(jd)
}

/// Shared worker: spectral data plus the base change, and optionally the
/// raw chains per eigenvalue (consumed by the quaternionic route).
pub(crate) fn complex_class_chains(
    x: &MatrixC,
    hints: &[GaussianRational],
) -> Result<Vec<(GaussianRational, ChainSet<GaussianRational>)>, SpectralError> {
    if !x.is_square() {
        return Err(SpectralError::NotSquare);
    }
    let poly = char_poly(x);
    let roots = monic_gaussian_roots(&poly, hints)?;
    let mut out = Vec::with_capacity(roots.len());
    for (lambda, mult) in roots {
        let shifted = shift(x, &lambda);
        let chains = generalized_chains(&shifted, mult).ok_or_else(|| {
            SpectralError::InvalidSpec(format!("chain construction failed at eigenvalue {lambda}"))
        })?;
        out.push((lambda, chains));
    }
    Ok(out)
}

fn jordan_with_chains(
    x: &MatrixC,
    hints: &[GaussianRational],
) -> Result<(Vec<SpectralDatum>, MatrixC), SpectralError> {
    let n = x.rows();
    let per_class = complex_class_chains(x, hints)?;
    let mut data = Vec::with_capacity(per_class.len());
    let mut columns: Vec<Vec<GaussianRational>> = Vec::with_capacity(n);
    for (lambda, set) in &per_class {
        data.push(SpectralDatum {
            class: EigenvalueClass::new(FieldTag::C, lambda.clone()),
            partition: set.partition.clone(),
        });
        columns.extend(chain_columns(&set.chains));
    }
    let p = Matrix::from_columns(n, &columns);
    let base_change = inverse(&p).ok_or_else(|| {
        SpectralError::InvalidSpec("generalized eigenvectors do not form a basis".into())
    })?;
    Ok((data, base_change))
}

fn shift(x: &MatrixC, lambda: &GaussianRational) -> MatrixC {
    let mut m = x.clone();
    for i in 0..x.rows() {
        let v = m.at(i, i) - lambda;
        m.set(i, i, v);
    }
    m
}
