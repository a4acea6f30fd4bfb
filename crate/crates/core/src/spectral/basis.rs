//! The ordered Jordan basis for a nilpotent structure.
//!
//! For a partition [d₁^{t₁}, …, d_s^{t_s}] with standard chain basis
//! {Xˡ·vᵢ^{dⱼ}}, the ordered basis is
//!
//! ```text
//! B(m) = B^{d₁-m}(d₁) ∨ ⋯ ∨ B^{d_s-m}(d_s),   B = B(1) ∨ ⋯ ∨ B(d₁)
//! ```
//!
//! where Bˡ(dⱼ) lists Xˡ·v₁, …, Xˡ·v_{tⱼ} and parts with dⱼ < m are
//! skipped. In this order every reverser of the nilpotent is block upper
//! triangular with diagonal segments of the sizes returned by
//! [`OrderedJordanBasis::segment_sizes`].

use crate::matrices::MatrixC;
use crate::partitions::Partition;
use crate::scalars::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedJordanBasis {
    partition: Partition,
    /// position -> (distinct-part index j, copy i, power l), all 0-based
    triples: Vec<(usize, usize, usize)>,
    /// position -> index in the standard (block-concatenated) Jordan basis
    permutation: Vec<usize>,
    /// sizes t_{d_j} of the consecutive diagonal segments of B
    segment_sizes: Vec<usize>,
}

/// Index of Xˡ·vᵢ^{dⱼ} in the standard basis, where block columns read
/// bottom-up (X^{d-1}v first, v last).
fn standard_index(partition: &Partition, j: usize, i: usize, l: usize) -> usize {
    let pairs = partition.pairs();
    let mut offset = 0;
    for &(size, t) in &pairs[..j] {
        offset += size * t;
    }
    let d_j = pairs[j].0;
    offset + i * d_j + (d_j - 1 - l)
}

pub fn ordered_basis(partition: &Partition) -> OrderedJordanBasis {
    let pairs = partition.pairs();
    let d1 = pairs.first().map_or(0, |&(size, _)| size);
    let mut triples = Vec::with_capacity(partition.n());
    let mut segment_sizes = Vec::new();
    for m in 1..=d1 {
        for (j, &(size, t)) in pairs.iter().enumerate() {
            if size < m {
                break;
            }
            segment_sizes.push(t);
            for i in 0..t {
                triples.push((j, i, size - m));
            }
        }
    }
    let permutation = triples
        .iter()
        .map(|&(j, i, l)| standard_index(partition, j, i, l))
        .collect();
    OrderedJordanBasis {
        partition: partition.clone(),
        triples,
        permutation,
        segment_sizes,
    }
}

impl OrderedJordanBasis {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    /// position -> standard basis index.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Sizes of the diagonal segments (t_{d_j} repeated d_j times each, in
    /// the interleaved order of the definition).
    pub fn segment_sizes(&self) -> &[usize] {
        &self.segment_sizes
    }

    /// Permutation matrix P with P·e_pos = e_{standard index}; a matrix g
    /// written in the standard basis becomes P⁻¹·g·P = Pᵀ·g·P in B.
    pub fn permutation_matrix(&self) -> MatrixC {
        let n = self.permutation.len();
        let mut p = MatrixC::zero(n, n);
        for (pos, &std_idx) in self.permutation.iter().enumerate() {
            p.set(std_idx, pos, GaussianRational::one());
        }
        p
    }

    /// Rewrite a standard-basis matrix in the ordered basis.
    pub fn to_ordered(&self, g: &MatrixC) -> MatrixC {
        let p = self.permutation_matrix();
        p.transpose().mul(g).mul(&p)
    }

    /// Check the block-upper-triangular zero pattern with respect to the
    /// diagonal segments.
    pub fn is_block_upper_triangular(&self, g: &MatrixC) -> bool {
        let mut starts = Vec::with_capacity(self.segment_sizes.len() + 1);
        let mut acc = 0;
        for &s in &self.segment_sizes {
            starts.push(acc);
            acc += s;
        }
        starts.push(acc);
        let segment_of = |idx: usize| -> usize {
            starts
                .windows(2)
                .position(|w| idx >= w[0] && idx < w[1])
                .expect("index in range")
        };
        for r in 0..g.rows() {
            for c in 0..g.cols() {
                if segment_of(r) > segment_of(c) && !g.at(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}
