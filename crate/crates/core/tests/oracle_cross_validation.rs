//! Cross-validation of the classifiers against the exhaustive monomial
//! search on canonical forms.
//!
//! Every witness the strong builders produce is monomial in canonical
//! coordinates (sign diagonals, sector swaps, j-twists), so on a canonical
//! form the search must find a witness exactly when the classifier says
//! strongly real — an independent, exhaustive confirmation of the
//! classification criteria at desk scale, including the determinant-parity
//! obstruction for mixed spectra with an even zero partition.

mod common;

use adreal_core::reality::{classify_c, classify_h, TraceGate};
use adreal_core::witness::{negative_search_oracle_c, negative_search_oracle_h};

#[test]
fn monomial_search_agrees_with_classifier_over_c() {
    for n in 1..=6 {
        for spec in common::real_lattice_c(n) {
            let x = spec.canonical_form();
            let report = classify_c(&spec, TraceGate::RequireTraceZero).unwrap();
            let found = negative_search_oracle_c(&x).unwrap();
            assert_eq!(
                found.is_some(),
                report.strongly_real,
                "n = {n}, spec {:?}",
                spec.data
            );
        }
    }
    for spec in common::non_real_specs_c() {
        let x = spec.canonical_form();
        assert!(negative_search_oracle_c(&x).unwrap().is_none());
    }
}

#[test]
fn monomial_search_agrees_with_classifier_over_h() {
    for n in 1..=4 {
        for spec in common::lattice_h(n) {
            let x = spec.canonical_form();
            let report = classify_h(&spec, TraceGate::RequireTraceZero).unwrap();
            let found = negative_search_oracle_h(&x).unwrap();
            assert_eq!(
                found.is_some(),
                report.strongly_real,
                "n = {n}, spec {:?}",
                spec.data
            );
        }
    }
}
