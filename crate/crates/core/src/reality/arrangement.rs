//! Canonical arrangements: the block layouts the constructive proofs work
//! in, together with the exact conjugation relating them to the canonical
//! Jordan form.
//!
//! Over ℂ: `X_arr = N(d₀, 0) ⊕ (⊕ᵢ J(dᵢ, λᵢ)) ⊕ (⊕ᵢ J(dᵢ, -λᵢ))` with the
//! pair classes listed plus-side first. Over ℍ the purely imaginary
//! classes sit between the zero block and the ± pairs, and the minus-side
//! blocks carry the literal eigenvalue `-λ` (conjugate of the canonical
//! class representative), reached by a per-block j-twist.

use num_traits::{Signed, Zero};

use crate::matrices::{Matrix, MatrixC, MatrixH};
use crate::partitions::Partition;
use crate::scalars::{GaussianRational, RationalQuaternion, Scalar};
use crate::spectral::{
    jordan_block, ComplexEmbeddable, EigenvalueClass, JordanData, JordanDataC, JordanDataH,
};

/// One ± pair of eigenvalue classes; `plus` is the representative with the
/// larger (re, im) sort key over ℂ, the one with positive real part over ℍ.
#[derive(Debug, Clone)]
pub struct PairSector {
    pub plus: GaussianRational,
    pub partition: Partition,
}

impl PairSector {
    /// Multiplicity per side.
    pub fn side_multiplicity(&self) -> usize {
        self.partition.n()
    }
}

/// Purely imaginary (or zero) sector over ℍ.
#[derive(Debug, Clone)]
pub struct ImaginarySector {
    pub mu: GaussianRational,
    pub partition: Partition,
}

/// Block segments of the canonical form, one per class in canonical order.
fn class_segments<S: ComplexEmbeddable>(jd: &JordanData<S>) -> Vec<(usize, usize)> {
    let mut segments = Vec::with_capacity(jd.data.len());
    let mut offset = 0;
    for d in &jd.data {
        let len = d.multiplicity();
        segments.push((offset, len));
        offset += len;
    }
    segments
}

/// Permutation matrix sending canonical-form coordinates to arrangement
/// coordinates: rows are arrangement positions, columns canonical ones.
fn segment_permutation<S: Scalar>(
    n: usize,
    order: &[usize],
    segments: &[(usize, usize)],
) -> Matrix<S> {
    let mut w = Matrix::zero(n, n);
    let mut arr_offset = 0;
    for &class_idx in order {
        let (start, len) = segments[class_idx];
        for k in 0..len {
            w.set(arr_offset + k, start + k, S::one());
        }
        arr_offset += len;
    }
    debug_assert_eq!(arr_offset, n);
    w
}

/// Canonical arrangement over ℂ. Exists exactly when the data passes the
/// pairing and partition conditions (`None` otherwise).
pub struct ArrangementC {
    pub zero: Option<Partition>,
    pub pairs: Vec<PairSector>,
    /// X_arr, the arrangement form itself.
    pub form: MatrixC,
    /// W with `X_arr = W · F · W⁻¹` for the canonical form F.
    pub transform: MatrixC,
    pub transform_inv: MatrixC,
}

impl ArrangementC {
    pub fn zero_multiplicity(&self) -> usize {
        self.zero.as_ref().map_or(0, Partition::n)
    }

    /// Σ pᵢ, the per-side total of the pair sectors.
    pub fn pair_side_total(&self) -> usize {
        self.pairs.iter().map(PairSector::side_multiplicity).sum()
    }
}

pub fn arrange_c(jd: &JordanDataC) -> Option<ArrangementC> {
    let mut zero = None;
    let mut pairs: Vec<PairSector> = Vec::new();
    let mut order_plus: Vec<usize> = Vec::new();
    let mut order_minus: Vec<usize> = Vec::new();
    let mut zero_idx: Option<usize> = None;
    let mut visited = vec![false; jd.data.len()];
    for (idx, d) in jd.data.iter().enumerate() {
        if visited[idx] {
            continue;
        }
        let rep = d.class.rep();
        if rep.is_zero() {
            zero = Some(d.partition.clone());
            zero_idx = Some(idx);
            visited[idx] = true;
            continue;
        }
        let negated = -rep;
        let partner_idx = jd
            .data
            .iter()
            .position(|other| other.class.rep() == &negated)?;
        if visited[partner_idx] {
            return None;
        }
        let partner = &jd.data[partner_idx];
        if partner.partition != d.partition {
            return None;
        }
        visited[idx] = true;
        visited[partner_idx] = true;
        let (plus_idx, minus_idx) = if rep > &negated {
            (idx, partner_idx)
        } else {
            (partner_idx, idx)
        };
        pairs.push(PairSector {
            plus: jd.data[plus_idx].class.rep().clone(),
            partition: d.partition.clone(),
        });
        order_plus.push(plus_idx);
        order_minus.push(minus_idx);
    }
    // deterministic pair order by plus representative
    let mut pair_order: Vec<usize> = (0..pairs.len()).collect();
    pair_order.sort_by(|&a, &b| pairs[a].plus.cmp(&pairs[b].plus));
    let pairs: Vec<PairSector> = pair_order.iter().map(|&i| pairs[i].clone()).collect();
    let order_plus: Vec<usize> = pair_order.iter().map(|&i| order_plus[i]).collect();
    let order_minus: Vec<usize> = pair_order.iter().map(|&i| order_minus[i]).collect();

    let mut order = Vec::with_capacity(jd.data.len());
    if let Some(z) = zero_idx {
        order.push(z);
    }
    order.extend(&order_plus);
    order.extend(&order_minus);

    let segments = class_segments(jd);
    let transform: MatrixC = segment_permutation(jd.n, &order, &segments);
    let transform_inv = transform.transpose();
    let form = transform.mul(&jd.canonical_form()).mul(&transform_inv);
    Some(ArrangementC {
        zero,
        pairs,
        form,
        transform,
        transform_inv,
    })
}

/// Canonical arrangement over ℍ.
pub struct ArrangementH {
    pub zero: Option<Partition>,
    pub imaginary: Vec<ImaginarySector>,
    pub pairs: Vec<PairSector>,
    pub form: MatrixH,
    pub transform: MatrixH,
    pub transform_inv: MatrixH,
}

impl ArrangementH {
    pub fn zero_multiplicity(&self) -> usize {
        self.zero.as_ref().map_or(0, Partition::n)
    }

    pub fn imaginary_total(&self) -> usize {
        self.imaginary.iter().map(|s| s.partition.n()).sum()
    }

    pub fn pair_side_total(&self) -> usize {
        self.pairs.iter().map(PairSector::side_multiplicity).sum()
    }
}

pub fn arrange_h(jd: &JordanDataH) -> Option<ArrangementH> {
    let mut zero = None;
    let mut zero_idx = None;
    let mut imaginary: Vec<ImaginarySector> = Vec::new();
    let mut imag_order: Vec<usize> = Vec::new();
    let mut pairs: Vec<PairSector> = Vec::new();
    let mut order_plus: Vec<usize> = Vec::new();
    let mut order_minus: Vec<usize> = Vec::new();
    let mut visited = vec![false; jd.data.len()];
    for (idx, d) in jd.data.iter().enumerate() {
        if visited[idx] {
            continue;
        }
        let rep = d.class.rep();
        if rep.is_zero() {
            zero = Some(d.partition.clone());
            zero_idx = Some(idx);
            visited[idx] = true;
            continue;
        }
        if rep.re.is_zero() {
            imaginary.push(ImaginarySector {
                mu: rep.clone(),
                partition: d.partition.clone(),
            });
            imag_order.push(idx);
            visited[idx] = true;
            continue;
        }
        // class of -λ is represented with nonnegative imaginary part
        let partner_rep = EigenvalueClass::new(crate::spectral::FieldTag::H, -rep)
            .rep()
            .clone();
        let partner_idx = jd
            .data
            .iter()
            .position(|other| other.class.rep() == &partner_rep)?;
        if visited[partner_idx] || partner_idx == idx {
            return None;
        }
        if jd.data[partner_idx].partition != d.partition {
            return None;
        }
        visited[idx] = true;
        visited[partner_idx] = true;
        let (plus_idx, minus_idx) = if rep.re.is_positive() {
            (idx, partner_idx)
        } else {
            (partner_idx, idx)
        };
        pairs.push(PairSector {
            plus: jd.data[plus_idx].class.rep().clone(),
            partition: d.partition.clone(),
        });
        order_plus.push(plus_idx);
        order_minus.push(minus_idx);
    }
    let mut pair_order: Vec<usize> = (0..pairs.len()).collect();
    pair_order.sort_by(|&a, &b| pairs[a].plus.cmp(&pairs[b].plus));
    let pairs: Vec<PairSector> = pair_order.iter().map(|&i| pairs[i].clone()).collect();
    let order_plus: Vec<usize> = pair_order.iter().map(|&i| order_plus[i]).collect();
    let order_minus: Vec<usize> = pair_order.iter().map(|&i| order_minus[i]).collect();

    let mut order = Vec::with_capacity(jd.data.len());
    if let Some(z) = zero_idx {
        order.push(z);
    }
    order.extend(&imag_order);
    order.extend(&order_plus);
    order.extend(&order_minus);

    let segments = class_segments(jd);
    // j-twist on the minus-side class segments turns J(d, rep) into
    // J(d, conj(rep)) = J(d, -λ)
    let n = jd.n;
    let mut twist = MatrixH::identity(n);
    let mut twist_inv = MatrixH::identity(n);
    for &minus_idx in &order_minus {
        let (start, len) = segments[minus_idx];
        for k in 0..len {
            twist.set(start + k, start + k, RationalQuaternion::j());
            twist_inv.set(start + k, start + k, -RationalQuaternion::j());
        }
    }
    let perm: MatrixH = segment_permutation(n, &order, &segments);
    let transform = perm.mul(&twist);
    let transform_inv = twist_inv.mul(&perm.transpose());
    let form = transform.mul(&jd.canonical_form()).mul(&transform_inv);
    Some(ArrangementH {
        zero,
        imaginary,
        pairs,
        form,
        transform,
        transform_inv,
    })
}

/// Assemble the expected arrangement form over ℂ directly from sectors (a
/// cross-check used in tests and asserted by the builders).
pub fn expected_form_c(arr: &ArrangementC) -> MatrixC {
    let mut blocks: Vec<MatrixC> = Vec::new();
    if let Some(z) = &arr.zero {
        blocks.extend(
            z.flatten()
                .into_iter()
                .map(|s| jordan_block(s, &GaussianRational::zero())),
        );
    }
    for p in &arr.pairs {
        blocks.extend(
            p.partition
                .flatten()
                .into_iter()
                .map(|s| jordan_block(s, &p.plus)),
        );
    }
    for p in &arr.pairs {
        let minus = -&p.plus;
        blocks.extend(
            p.partition
                .flatten()
                .into_iter()
                .map(|s| jordan_block(s, &minus)),
        );
    }
    if blocks.is_empty() {
        Matrix::zero(0, 0)
    } else {
        Matrix::block_diag(&blocks)
    }
}

/// Assemble the expected arrangement form over ℍ.
pub fn expected_form_h(arr: &ArrangementH) -> MatrixH {
    let embed = RationalQuaternion::from_complex;
    let mut blocks: Vec<MatrixH> = Vec::new();
    if let Some(z) = &arr.zero {
        blocks.extend(
            z.flatten()
                .into_iter()
                .map(|s| jordan_block(s, &RationalQuaternion::zero())),
        );
    }
    for sector in &arr.imaginary {
        blocks.extend(
            sector
                .partition
                .flatten()
                .into_iter()
                .map(|s| jordan_block(s, &embed(&sector.mu))),
        );
    }
    for p in &arr.pairs {
        blocks.extend(
            p.partition
                .flatten()
                .into_iter()
                .map(|s| jordan_block(s, &embed(&p.plus))),
        );
    }
    for p in &arr.pairs {
        let minus = embed(&-&p.plus);
        blocks.extend(
            p.partition
                .flatten()
                .into_iter()
                .map(|s| jordan_block(s, &minus)),
        );
    }
    if blocks.is_empty() {
        Matrix::zero(0, 0)
    } else {
        Matrix::block_diag(&blocks)
    }
}
