//! Constructive checks of the reverser-structure facts the strong
//! quaternionic classification rests on: for a single purely imaginary
//! class, an involutive witness g factors as g = h·j with h complex
//! satisfying h·h̄ = -I, which forces every multiplicity even; when a
//! multiplicity is odd the builder must refuse.

mod common;

use adreal_core::matrices::{Matrix, MatrixC, MatrixH};
use adreal_core::partitions::enumerate_partitions;
use adreal_core::reality::Reason;
use adreal_core::scalars::{GaussianRational, RationalQuaternion};
use adreal_core::spectral::{jordan_form_h, nilpotent_assembly, EigenvalueClass, FieldTag};
use adreal_core::witness::{build_strong_witness_h, WitnessError};

/// Split a quaternionic matrix as g = h + k·j with complex h, k.
fn right_j_split(g: &MatrixH) -> (MatrixC, MatrixC) {
    let h = Matrix::from_fn(g.rows(), g.cols(), |r, c| {
        let (z1, _) = g.at(r, c).complex_split();
        z1
    });
    let k = Matrix::from_fn(g.rows(), g.cols(), |r, c| {
        let (_, z2) = g.at(r, c).complex_split();
        z2
    });
    (h, k)
}

#[test]
fn strong_witness_at_single_imaginary_class_factors_through_j() {
    let mu = RationalQuaternion::i();
    for n in 2..=4 {
        for d in enumerate_partitions(n, 40).unwrap() {
            let x = nilpotent_assembly(&d, &RationalQuaternion::zero())
                .add(&MatrixH::diagonal(&vec![mu.clone(); n]));
            let jd = jordan_form_h(&x, &[]).unwrap();
            assert_eq!(jd.data.len(), 1);
            assert_eq!(
                jd.data[0].class,
                EigenvalueClass::new(FieldTag::H, GaussianRational::i())
            );
            let all_even = d.pairs().iter().all(|&(_, t)| t % 2 == 0);
            match build_strong_witness_h(&x, &jd) {
                Ok(cert) => {
                    assert!(all_even, "witness exists only when every t is even");
                    // g anticommutes with the purely imaginary semisimple
                    // part, hence has no complex component: g = k·j with k
                    // complex, and k·conj(k) = -I
                    let (h_part, k) = right_j_split(&cert.g);
                    assert!(h_part.is_zero(), "partition {d}");
                    let product = k.mul(&k.conjugate());
                    assert_eq!(product, MatrixC::identity(n).neg(), "partition {d}");
                    // k reverses the nilpotent part
                    let nilp = nilpotent_assembly(&d, &GaussianRational::zero());
                    assert!(k.mul(&nilp).add(&nilp.mul(&k)).is_zero());
                }
                Err(WitnessError::NoWitness { reason }) => {
                    assert!(!all_even);
                    assert_eq!(reason, Reason::OddImaginaryMultiplicity);
                }
                Err(other) => panic!("unexpected error: {other}"),
            }
        }
    }
}
