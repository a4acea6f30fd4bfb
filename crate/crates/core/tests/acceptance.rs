//! Acceptance suite: one test per criterion, each printing a pass line.
//! Every check is exact — there is no tolerance anywhere in this file,
//! only time budgets.

mod common;

use std::time::Instant;

use adreal_core::matrices::{det_c, phi_embed, MatrixH};
use adreal_core::partitions::{atlas_rows, Partition};
use adreal_core::reality::{
    classify_c, classify_h, is_real_c, is_strongly_real_c, is_strongly_real_h, Reason, TraceGate,
};
use adreal_core::scalars::{rat, GaussianRational, RationalQuaternion};
use adreal_core::spectral::{
    jordan_block, jordan_form_c, jordan_form_h, nilpotent_assembly_c, nilpotent_assembly_h,
};
use adreal_core::witness::{
    build_real_witness_c, build_real_witness_h, build_strong_witness_c, build_strong_witness_h,
    build_strong_witness_nilpotent_c, negative_search_oracle_c, negative_search_oracle_h,
    sign_basis_involution, verify_c, verify_h, WitnessError,
};
use common::Rng;

/// Run one criterion and print its pass/fail line, re-raising any failure
/// for the harness.
fn run_criterion(criterion: usize, name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let started = Instant::now();
    match std::panic::catch_unwind(body) {
        Ok(()) => println!(
            "[acceptance] criterion {criterion} ({name}): PASS in {:.2?}",
            started.elapsed()
        ),
        Err(cause) => {
            println!(
                "[acceptance] criterion {criterion} ({name}): FAIL in {:.2?}",
                started.elapsed()
            );
            std::panic::resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_1_phi_homomorphism_suite() {
    run_criterion(1, "phi homomorphism suite, 1000 random pairs", || {
        let started = Instant::now();
        let mut rng = Rng::new(0xC0FFEE);
        let mut checked = 0;
        while checked < 1000 {
            let n = 1 + (checked % 5);
            let a = common::random_matrix_h(&mut rng, n);
            let b = common::random_matrix_h(&mut rng, n);
            assert_eq!(
                phi_embed(&a.mul(&b)),
                phi_embed(&a).mul(&phi_embed(&b)),
                "Phi(AB) = Phi(A)Phi(B)"
            );
            assert_eq!(
                phi_embed(&a.add(&b)),
                phi_embed(&a).add(&phi_embed(&b)),
                "Phi(A+B) = Phi(A)+Phi(B)"
            );
            use num_traits::Signed;
            assert!(!adreal_core::det_h(&a).is_negative(), "det_H >= 0");
            checked += 1;
        }
        assert!(checked >= 1000);
        let budget = std::time::Duration::from_secs(10);
        assert!(
            started.elapsed() < budget,
            "criterion 1 exceeded its 10 s budget: {:.2?}",
            started.elapsed()
        );
    });
}

#[test]
fn criterion_2_jordan_round_trip() {
    run_criterion(2, "jordan round-trip on the spectral lattice", || {
        let started = Instant::now();
        let mut rng = Rng::new(0x2718);
        let mut count = 0;
        for n in 1..=6 {
            for spec in common::real_lattice_c(n) {
                let f = spec.canonical_form();
                let (p, p_inv) = common::random_unimodular_c(&mut rng, n);
                let x = f.conjugate_by(&p, &p_inv);
                let jd = jordan_form_c(&x, &[]).expect("lattice spectra split");
                assert_eq!(jd.data, spec.data, "identical canonical data");
                assert_eq!(jd.canonical_form(), f);
                assert_eq!(jd.reconstruct(), x, "exact reconstruction");
                count += 1;
            }
        }
        for n in 1..=4 {
            for spec in common::lattice_h(n) {
                let f = spec.canonical_form();
                let (p, p_inv) = common::random_unimodular_h(&mut rng, n);
                let x = f.conjugate_by(&p, &p_inv);
                let jd = jordan_form_h(&x, &[]).expect("lattice spectra split");
                assert_eq!(jd.data, spec.data, "identical canonical data");
                assert_eq!(jd.canonical_form(), f);
                assert_eq!(jd.reconstruct(), x, "exact reconstruction");
                count += 1;
            }
        }
        let budget = std::time::Duration::from_secs(60);
        assert!(
            started.elapsed() < budget,
            "criterion 2 exceeded its 60 s budget: {:.2?}",
            started.elapsed()
        );
        println!("[acceptance] criterion 2 swept {count} lattice instances");
    });
}

#[test]
fn criterion_3_classifier_builder_completeness() {
    run_criterion(3, "classifier-builder completeness", || {
        let mut rng = Rng::new(0x3141);
        let mut positives = 0;
        let mut negatives = 0;
        for n in 1..=6 {
            for spec in common::real_lattice_c(n) {
                let f = spec.canonical_form();
                let (p, p_inv) = common::random_unimodular_c(&mut rng, n);
                let x = f.conjugate_by(&p, &p_inv);
                let jd = jordan_form_c(&x, &[]).unwrap();
                let report = classify_c(&jd, TraceGate::RequireTraceZero).unwrap();

                let weak = build_real_witness_c(&x, &jd);
                assert_eq!(weak.is_ok(), report.real, "weak builder iff real (C)");
                if let Ok(cert) = weak {
                    let recheck = verify_c(&cert.g, &x).unwrap();
                    assert!(recheck.flags.conjugates_to_negative && recheck.flags.special);
                    assert_eq!(recheck.flags, cert.flags);
                }

                let strong = build_strong_witness_c(&x, &jd);
                assert_eq!(
                    strong.is_ok(),
                    report.strongly_real,
                    "strong builder iff strongly real (C), spec {:?}",
                    spec.data
                );
                match strong {
                    Ok(cert) => {
                        let recheck = verify_c(&cert.g, &x).unwrap();
                        assert!(
                            recheck.flags.conjugates_to_negative
                                && recheck.flags.involutive
                                && recheck.flags.special
                        );
                        positives += 1;
                    }
                    Err(WitnessError::NoWitness { reason }) => {
                        assert_eq!(reason, report.reason);
                        negatives += 1;
                    }
                    Err(other) => panic!("unexpected builder error: {other}"),
                }
            }
        }
        for spec in common::non_real_specs_c() {
            let x = spec.canonical_form();
            let jd = jordan_form_c(&x, &[]).unwrap();
            let report = classify_c(&jd, TraceGate::RequireTraceZero).unwrap();
            assert!(!report.real);
            assert!(build_real_witness_c(&x, &jd).is_err());
            assert!(build_strong_witness_c(&x, &jd).is_err());
            negatives += 1;
        }
        for n in 1..=4 {
            for spec in common::lattice_h(n) {
                let f = spec.canonical_form();
                let (p, p_inv) = common::random_unimodular_h(&mut rng, n);
                let x = f.conjugate_by(&p, &p_inv);
                let jd = jordan_form_h(&x, &[]).unwrap();
                let report = classify_h(&jd, TraceGate::RequireTraceZero).unwrap();

                let weak = build_real_witness_h(&x, &jd);
                assert_eq!(weak.is_ok(), report.real, "weak builder iff real (H)");
                if let Ok(cert) = weak {
                    let recheck = verify_h(&cert.g, &x).unwrap();
                    assert!(recheck.flags.conjugates_to_negative && recheck.flags.special);
                }

                let strong = build_strong_witness_h(&x, &jd);
                assert_eq!(
                    strong.is_ok(),
                    report.strongly_real,
                    "strong builder iff strongly real (H), spec {:?}",
                    spec.data
                );
                match strong {
                    Ok(cert) => {
                        let recheck = verify_h(&cert.g, &x).unwrap();
                        assert!(
                            recheck.flags.conjugates_to_negative
                                && recheck.flags.involutive
                                && recheck.flags.special
                        );
                        positives += 1;
                    }
                    Err(WitnessError::NoWitness { reason }) => {
                        assert_eq!(reason, report.reason);
                        negatives += 1;
                    }
                    Err(other) => panic!("unexpected builder error: {other}"),
                }
            }
        }
        for spec in common::non_real_specs_h() {
            let x = spec.canonical_form();
            let jd = jordan_form_h(&x, &[]).unwrap();
            let report = classify_h(&jd, TraceGate::RequireTraceZero).unwrap();
            assert!(!report.real);
            assert!(build_real_witness_h(&x, &jd).is_err());
            negatives += 1;
        }
        assert!(positives > 0 && negatives > 0, "both directions exercised");
        println!(
        "[acceptance] criterion 3 verified {positives} positive and {negatives} negative instances"
    );
    });
}

#[test]
fn criterion_4_worked_examples() {
    run_criterion(4, "worked examples reproduced exactly", || {
        let qi = RationalQuaternion::i;
        let qj = RationalQuaternion::j;

        // (a) X = [[i,1],[0,i]] over H: real but not strongly real, with the
        // split conjugators sigma and tau verifying X_s and X_n separately
        let x = MatrixH::from_rows(vec![
            vec![qi(), RationalQuaternion::one()],
            vec![RationalQuaternion::zero(), qi()],
        ]);
        let jd = jordan_form_h(&x, &[]).unwrap();
        let report = classify_h(&jd, TraceGate::RequireTraceZero).unwrap();
        assert!(report.real && !report.strongly_real);
        assert_eq!(report.reason, Reason::OddImaginaryMultiplicity);
        let split = adreal_core::reality::split_semisimple_nilpotent(&x, &jd);
        let sigma = MatrixH::from_rows(vec![
            vec![RationalQuaternion::zero(), qj()],
            vec![-qj(), RationalQuaternion::zero()],
        ]);
        let tau = MatrixH::diagonal(&[RationalQuaternion::one(), -RationalQuaternion::one()]);
        let cs = verify_h(&sigma, &split.semisimple).unwrap();
        assert!(cs.flags.conjugates_to_negative && cs.flags.involutive && cs.flags.special);
        let cn = verify_h(&tau, &split.nilpotent).unwrap();
        assert!(cn.flags.conjugates_to_negative && cn.flags.involutive && cn.flags.special);

        // (b) J(n, a·i) ⊕ J(n, a·i) strongly real with verified involution
        for n in 1..=5usize {
            for a in [1i64, 2] {
                let lam = RationalQuaternion::new(rat(0), rat(a), rat(0), rat(0));
                let b = jordan_block(n, &lam);
                let x = MatrixH::block_diag(&[b.clone(), b]);
                let jd = jordan_form_h(&x, &[]).unwrap();
                let (strong, _) = is_strongly_real_h(&jd).unwrap();
                assert!(strong, "J({n},{a}i) ⊕ J({n},{a}i) is strongly real");
                let cert = build_strong_witness_h(&x, &jd).unwrap();
                assert!(
                    cert.flags.involutive
                        && cert.flags.special
                        && cert.flags.conjugates_to_negative
                );
            }
        }

        // (c) a single J(n, a·i) is not strongly real: the builder refuses and
        // the monomial search finds nothing for n ≤ 4
        for n in 1..=4usize {
            for a in [1i64, 2] {
                let lam = RationalQuaternion::new(rat(0), rat(a), rat(0), rat(0));
                let x = jordan_block(n, &lam);
                let jd = jordan_form_h(&x, &[]).unwrap();
                let (strong, why) = is_strongly_real_h(&jd).unwrap();
                assert!(!strong);
                assert_eq!(why, Reason::OddImaginaryMultiplicity);
                assert!(matches!(
                    build_strong_witness_h(&x, &jd),
                    Err(WitnessError::NoWitness { .. })
                ));
                assert!(negative_search_oracle_h(&x).unwrap().is_none());
            }
        }

        // (d) nilpotent [2]: refused over C, witnessed over H
        let d2 = Partition::row(2);
        assert!(matches!(
            build_strong_witness_nilpotent_c(&d2),
            Err(WitnessError::NoWitness {
                reason: Reason::ZeroPartitionObstruction
            })
        ));
        let xc = nilpotent_assembly_c(&d2, &GaussianRational::zero());
        assert!(negative_search_oracle_c(&xc).unwrap().is_none());
        let xh = nilpotent_assembly_h(&d2, &RationalQuaternion::zero());
        let jdh = jordan_form_h(&xh, &[]).unwrap();
        let cert = build_strong_witness_h(&xh, &jdh).unwrap();
        assert!(cert.flags.involutive && cert.flags.special && cert.flags.conjugates_to_negative);
    });
}

#[test]
fn criterion_5_partition_census() {
    run_criterion(5, "partition census against the brute-force oracle", || {
        let started = Instant::now();

        // independent oracle: flat recursive generation, direct evaluation
        fn flat_partitions(total: usize, max: usize) -> Vec<Vec<usize>> {
            if total == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for first in (1..=total.min(max)).rev() {
                for mut rest in flat_partitions(total - first, first) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
            out
        }
        fn oracle_counts(n: usize) -> (usize, usize, usize, usize) {
            let all = flat_partitions(n, n);
            let mut even = 0;
            let mut very_even = 0;
            let mut p_tilde_e = 0;
            for parts in &all {
                let is_even = parts.iter().all(|d| d % 2 == 0);
                let mut mult = std::collections::BTreeMap::new();
                for d in parts {
                    *mult.entry(*d).or_insert(0usize) += 1;
                }
                let is_very_even = is_even && mult.values().all(|t| t % 2 == 0);
                let e2_sum: usize = mult
                    .iter()
                    .filter(|(d, _)| *d % 4 == 2)
                    .map(|(_, t)| *t)
                    .sum();
                let in_pte = is_even && !is_very_even && e2_sum % 2 == 1;
                even += usize::from(is_even);
                very_even += usize::from(is_very_even);
                p_tilde_e += usize::from(in_pte);
            }
            (all.len(), even, very_even, p_tilde_e)
        }

        let rows = atlas_rows(30).unwrap();
        for row in &rows {
            let (total, even, very_even, p_tilde_e) = oracle_counts(row.n);
            assert_eq!(
                (row.total, row.even, row.very_even, row.p_tilde_e),
                (total, even, very_even, p_tilde_e),
                "atlas row n = {}",
                row.n
            );
            assert_eq!(row.strongly_real_nilpotent_c, total - p_tilde_e);
            assert_eq!(row.strongly_real_nilpotent_h, total);
            if row.n % 4 != 2 {
                assert_eq!(row.p_tilde_e, 0);
            }
        }
        let find = |n: usize| rows.iter().find(|r| r.n == n).unwrap().p_tilde_e;
        assert_eq!(find(2), 1);
        assert_eq!(find(4), 0);
        assert_eq!(find(6), 3);

        let budget = std::time::Duration::from_secs(5);
        assert!(
            started.elapsed() < budget,
            "criterion 5 exceeded its 5 s budget: {:.2?}",
            started.elapsed()
        );
    });
}

#[test]
fn criterion_6_sign_involution_determinant_law() {
    run_criterion(6, "determinant law of the sign-basis involution", || {
        for n in 1..=12 {
            for d in adreal_core::enumerate_partitions(n, 40).unwrap() {
                let g = sign_basis_involution(&d);
                let det = det_c(&g);
                let expected = if d.e2_multiplicity_sum() % 2 == 0 {
                    GaussianRational::one()
                } else {
                    -GaussianRational::one()
                };
                assert_eq!(det, expected, "determinant law at partition {d}");
                // and it really is an involutive reverser of N(d, 0)
                let x = nilpotent_assembly_c(&d, &GaussianRational::zero());
                let cert = verify_c(&g, &x).unwrap();
                assert!(cert.flags.conjugates_to_negative && cert.flags.involutive);
            }
        }
    });
}

#[test]
fn criterion_7_one_way_h_to_c_transfer() {
    run_criterion(7, "one-way H to C transfer", || {
        let mut rng = Rng::new(0x7777);
        let mut transferred = 0;
        for n in 1..=4 {
            for spec in common::lattice_h(n) {
                let f = spec.canonical_form();
                let (p, p_inv) = common::random_unimodular_h(&mut rng, n);
                let x = f.conjugate_by(&p, &p_inv);
                let jd = jordan_form_h(&x, &[]).unwrap();
                let report_h = classify_h(&jd, TraceGate::RequireTraceZero).unwrap();
                if !report_h.real {
                    continue;
                }
                let phi_x = phi_embed(&x);
                let jd_c = jordan_form_c(&phi_x, &[]).unwrap();
                let (real_c, _) = is_real_c(&jd_c).unwrap();
                assert!(real_c, "real over H implies Phi(X) real over C");
                if report_h.strongly_real {
                    let (strong_c, _) = is_strongly_real_c(&jd_c).unwrap();
                    assert!(
                        strong_c,
                        "strongly real over H implies Phi(X) strongly real over C"
                    );
                }
                transferred += 1;
            }
        }
        assert!(transferred > 0);

        // the strong-case converse fails on the 2x2 Jordan block at i:
        // Phi(X) is strongly real over C while X is not over H
        let x = MatrixH::from_rows(vec![
            vec![RationalQuaternion::i(), RationalQuaternion::one()],
            vec![RationalQuaternion::zero(), RationalQuaternion::i()],
        ]);
        let jd = jordan_form_h(&x, &[]).unwrap();
        let (strong_h, _) = is_strongly_real_h(&jd).unwrap();
        assert!(!strong_h);
        let jd_c = jordan_form_c(&phi_embed(&x), &[]).unwrap();
        let (strong_c, _) = is_strongly_real_c(&jd_c).unwrap();
        assert!(strong_c, "the converse must fail on the 2x2 example");

        println!("[acceptance] criterion 7 transferred {transferred} positive H verdicts");
    });
}
