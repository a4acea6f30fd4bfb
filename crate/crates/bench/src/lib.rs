//! Fixtures shared by the criterion benchmarks: deterministic matrices
//! exercising each stage of the pipeline.

use adreal_core::matrices::{inverse, Matrix, MatrixC, MatrixH};
use adreal_core::partitions::Partition;
use adreal_core::scalars::{rat, ratio, GaussianRational, RationalQuaternion};
use adreal_core::spectral::{jordan_block, nilpotent_assembly_c};

/// Small deterministic generator (xorshift64*).
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

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }
}

pub fn random_quaternion_matrix(rng: &mut Rng, n: usize) -> MatrixH {
    Matrix::from_fn(n, n, |_, _| {
        RationalQuaternion::new(
            ratio(rng.int_in(-3, 3), rng.int_in(1, 2)),
            ratio(rng.int_in(-3, 3), rng.int_in(1, 2)),
            ratio(rng.int_in(-3, 3), rng.int_in(1, 2)),
            ratio(rng.int_in(-3, 3), rng.int_in(1, 2)),
        )
    })
}

/// The 8×8 worked-example nilpotent `N([4,2²],0)` conjugated by an exact
/// unimodular matrix.
pub fn conjugated_worked_example() -> MatrixC {
    let d = Partition::new(vec![(4, 1), (2, 2)]).unwrap();
    let f = nilpotent_assembly_c(&d, &GaussianRational::zero());
    let mut rng = Rng::new(0xBEA7);
    let mut p = MatrixC::identity(8);
    for r in 0..8 {
        for c in 0..8 {
            if r < c && rng.int_in(0, 1) == 1 {
                p.set(r, c, GaussianRational::new(rat(rng.int_in(-2, 2)), rat(0)));
            }
        }
    }
    let p_inv = inverse(&p).expect("unitriangular");
    f.conjugate_by(&p, &p_inv)
}

/// J(2, i) ⊕ J(2, i) over ℍ, the strongly real paired Jordan form.
pub fn paired_jordan_blocks() -> MatrixH {
    let b = jordan_block(2, &RationalQuaternion::i());
    MatrixH::block_diag(&[b.clone(), b])
}
