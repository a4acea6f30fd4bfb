//! Shared test support: a deterministic generator, random exact matrices,
//! and the spectral-spec lattices the acceptance suite sweeps.

#![allow(dead_code)]

use adreal_core::matrices::{inverse, inverse_h_direct, Matrix, MatrixC, MatrixH};
use adreal_core::partitions::{enumerate_partitions, Partition};
use adreal_core::scalars::{rat, ratio, GaussianRational, RationalQuaternion};
use adreal_core::spectral::{EigenvalueClass, FieldTag, JordanDataC, JordanDataH, SpectralDatum};

/// xorshift64*; deterministic across runs and platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.below((hi - lo + 1) as u64) as i64)
    }
}

pub fn random_rational(rng: &mut Rng) -> adreal_core::Rational {
    let numer = rng.int_in(-3, 3);
    let denom = rng.int_in(1, 2);
    ratio(numer, denom)
}

pub fn random_gaussian(rng: &mut Rng) -> GaussianRational {
    GaussianRational::new(random_rational(rng), random_rational(rng))
}

pub fn random_quaternion(rng: &mut Rng) -> RationalQuaternion {
    RationalQuaternion::new(
        random_rational(rng),
        random_rational(rng),
        random_rational(rng),
        random_rational(rng),
    )
}

pub fn random_matrix_h(rng: &mut Rng, n: usize) -> MatrixH {
    Matrix::from_fn(n, n, |_, _| random_quaternion(rng))
}

/// Unimodular conjugator: product of unitriangular matrices with small
/// integer entries, so the inverse is exact and cheap.
pub fn random_unimodular_c(rng: &mut Rng, n: usize) -> (MatrixC, MatrixC) {
    let mut lower = MatrixC::identity(n);
    let mut upper = MatrixC::identity(n);
    for r in 0..n {
        for c in 0..n {
            if r > c && rng.below(2) == 0 {
                lower.set(r, c, GaussianRational::from_i64(rng.int_in(-2, 2)));
            }
            if r < c && rng.below(2) == 0 {
                upper.set(
                    r,
                    c,
                    GaussianRational::new(rat(rng.int_in(-2, 2)), rat(rng.int_in(-1, 1))),
                );
            }
        }
    }
    let p = lower.mul(&upper);
    let p_inv = inverse(&p).expect("unitriangular product is invertible");
    (p, p_inv)
}

pub fn random_unimodular_h(rng: &mut Rng, n: usize) -> (MatrixH, MatrixH) {
    let mut lower = MatrixH::identity(n);
    let mut upper = MatrixH::identity(n);
    let small = |rng: &mut Rng| {
        RationalQuaternion::new(
            rat(rng.int_in(-1, 1)),
            rat(rng.int_in(-1, 1)),
            rat(rng.int_in(-1, 1)),
            rat(rng.int_in(-1, 1)),
        )
    };
    for r in 0..n {
        for c in 0..n {
            if r > c && rng.below(2) == 0 {
                lower.set(r, c, small(rng));
            }
            if r < c && rng.below(2) == 0 {
                upper.set(r, c, small(rng));
            }
        }
    }
    let p = lower.mul(&upper);
    let p_inv = inverse_h_direct(&p).expect("unitriangular product is invertible");
    (p, p_inv)
}

fn datum(field: FieldTag, rep: GaussianRational, partition: Partition) -> SpectralDatum {
    SpectralDatum {
        class: EigenvalueClass::new(field, rep),
        partition,
    }
}

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_i64(n)
}

/// Multisets (descending) of at most `max_parts` positive integers summing
/// to `total`.
fn multisets_summing_to(total: usize, max_parts: usize, max_first: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    if max_parts == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in (1..=total.min(max_first)).rev() {
        for mut rest in multisets_summing_to(total - first, max_parts - 1, first) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Every ± sign-paired spectral spec over ℂ with source dimension n:
/// all splits n = p_o + 2Σmᵢ, all zero partitions, all pair partitions,
/// pair eigenvalues drawn from a fixed palette.
pub fn real_lattice_c(n: usize) -> Vec<JordanDataC> {
    let palette = [gi(1), gi(2), GaussianRational::new(rat(1), rat(1))];
    let mut out = Vec::new();
    for p_o in 0..=n {
        if !(n - p_o).is_multiple_of(2) {
            continue;
        }
        let half = (n - p_o) / 2;
        let zero_partitions: Vec<Option<Partition>> = if p_o == 0 {
            vec![None]
        } else {
            enumerate_partitions(p_o, 40)
                .unwrap()
                .into_iter()
                .map(Some)
                .collect()
        };
        for pair_mults in multisets_summing_to(half, palette.len(), half.max(1)) {
            // partitions per pair: cartesian product
            let mut partition_choices: Vec<Vec<Partition>> = vec![Vec::new()];
            for &m in &pair_mults {
                let options = enumerate_partitions(m, 40).unwrap();
                let mut next = Vec::new();
                for base in &partition_choices {
                    for opt in &options {
                        let mut v = base.clone();
                        v.push(opt.clone());
                        next.push(v);
                    }
                }
                partition_choices = next;
            }
            for zp in &zero_partitions {
                for pchoice in &partition_choices {
                    let mut data = Vec::new();
                    if let Some(z) = zp {
                        data.push(datum(FieldTag::C, gi(0), z.clone()));
                    }
                    for (idx, part) in pchoice.iter().enumerate() {
                        let lambda = palette[idx].clone();
                        data.push(datum(FieldTag::C, lambda.clone(), part.clone()));
                        data.push(datum(FieldTag::C, -&lambda, part.clone()));
                    }
                    out.push(
                        JordanDataC::canonical(FieldTag::C, n, data)
                            .expect("lattice spec is valid"),
                    );
                }
            }
        }
    }
    out
}

/// Trace-free specs over ℂ that fail reality: pairing failures and
/// partition mismatches.
pub fn non_real_specs_c() -> Vec<JordanDataC> {
    let mut out = Vec::new();
    // eigenvalues {1 (x2), -2}: trace zero, no -1
    for zp in enumerate_partitions(2, 40).unwrap() {
        out.push(
            JordanDataC::canonical(
                FieldTag::C,
                3,
                vec![
                    datum(FieldTag::C, gi(1), zp),
                    datum(FieldTag::C, gi(-2), Partition::ones(1)),
                ],
            )
            .unwrap(),
        );
    }
    // {1, 2, -3}: diag example
    out.push(
        JordanDataC::canonical(
            FieldTag::C,
            3,
            vec![
                datum(FieldTag::C, gi(1), Partition::ones(1)),
                datum(FieldTag::C, gi(2), Partition::ones(1)),
                datum(FieldTag::C, gi(-3), Partition::ones(1)),
            ],
        )
        .unwrap(),
    );
    // partition mismatches at ±1 for m = 2, 3
    for m in 2..=3 {
        let options = enumerate_partitions(m, 40).unwrap();
        for a in &options {
            for b in &options {
                if a == b {
                    continue;
                }
                out.push(
                    JordanDataC::canonical(
                        FieldTag::C,
                        2 * m,
                        vec![
                            datum(FieldTag::C, gi(1), a.clone()),
                            datum(FieldTag::C, gi(-1), b.clone()),
                        ],
                    )
                    .unwrap(),
                );
            }
        }
    }
    out
}

/// Every spectral spec over ℍ with n = p_o + Σqᵢ + 2Σpⱼ: zero class,
/// purely imaginary classes from {i, 2i}, ± pairs from {1, 1+i}.
pub fn lattice_h(n: usize) -> Vec<JordanDataH> {
    let imag_palette = [GaussianRational::i(), GaussianRational::new(rat(0), rat(2))];
    let pair_palette = [gi(1), GaussianRational::new(rat(1), rat(1))];
    let mut out = Vec::new();
    for p_o in 0..=n {
        let zero_partitions: Vec<Option<Partition>> = if p_o == 0 {
            vec![None]
        } else {
            enumerate_partitions(p_o, 40)
                .unwrap()
                .into_iter()
                .map(Some)
                .collect()
        };
        for q_total in 0..=(n - p_o) {
            if !(n - p_o - q_total).is_multiple_of(2) {
                continue;
            }
            let pair_half = (n - p_o - q_total) / 2;
            for q_mults in multisets_summing_to(q_total, imag_palette.len(), q_total.max(1)) {
                for p_mults in multisets_summing_to(pair_half, pair_palette.len(), pair_half.max(1))
                {
                    // cartesian product over all class partitions
                    let mut choices: Vec<Vec<Partition>> = vec![Vec::new()];
                    for &m in q_mults.iter().chain(&p_mults) {
                        let options = enumerate_partitions(m, 40).unwrap();
                        let mut next = Vec::new();
                        for base in &choices {
                            for opt in &options {
                                let mut v = base.clone();
                                v.push(opt.clone());
                                next.push(v);
                            }
                        }
                        choices = next;
                    }
                    for zp in &zero_partitions {
                        for choice in &choices {
                            let mut data = Vec::new();
                            if let Some(z) = zp {
                                data.push(datum(FieldTag::H, gi(0), z.clone()));
                            }
                            for (idx, _) in q_mults.iter().enumerate() {
                                data.push(datum(
                                    FieldTag::H,
                                    imag_palette[idx].clone(),
                                    choice[idx].clone(),
                                ));
                            }
                            for (idx, _) in p_mults.iter().enumerate() {
                                let lambda = pair_palette[idx].clone();
                                let part = choice[q_mults.len() + idx].clone();
                                data.push(datum(FieldTag::H, lambda.clone(), part.clone()));
                                data.push(datum(FieldTag::H, -&lambda, part));
                            }
                            out.push(
                                JordanDataH::canonical(FieldTag::H, n, data)
                                    .expect("lattice spec is valid"),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

/// tr_ℍ-free specs over ℍ failing the pairing condition.
pub fn non_real_specs_h() -> Vec<JordanDataH> {
    vec![
        // classes 1 (mult 2) and -2 (mult 1): tr_H = 2(2 - 2) = 0
        JordanDataH::canonical(
            FieldTag::H,
            3,
            vec![
                datum(FieldTag::H, gi(1), Partition::ones(2)),
                datum(FieldTag::H, gi(-2), Partition::ones(1)),
            ],
        )
        .unwrap(),
        // partition mismatch at ±1
        JordanDataH::canonical(
            FieldTag::H,
            4,
            vec![
                datum(FieldTag::H, gi(1), Partition::row(2)),
                datum(FieldTag::H, gi(-1), Partition::ones(2)),
            ],
        )
        .unwrap(),
    ]
}
