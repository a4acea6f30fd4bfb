//! Roots of monic polynomials over ℚ(i), found exactly or refused.
//!
//! The polynomial is rescaled to a monic ℤ[i] polynomial, whose rational
//! roots are Gaussian integers dividing the constant term. Candidates are
//! the user hints plus the full divisor set of the constant term (times
//! units), retried after each deflation so shrinking constant terms keep
//! the search cheap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::gauss_int::{divisors_up_to_units, GaussInt};
use super::SpectralError;
use crate::scalars::{GaussianRational, Rational};

/// Returns (root, multiplicity) pairs sorted by (re, im). Errors when the
/// polynomial does not split over ℚ(i) with the available candidates, or
/// when a hint is not actually a root.
pub fn monic_gaussian_roots(
    coeffs: &[GaussianRational],
    hints: &[GaussianRational],
) -> Result<Vec<(GaussianRational, usize)>, SpectralError> {
    assert!(!coeffs.is_empty() && coeffs[0] == GaussianRational::one());
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(Vec::new());
    }

    // scale: q(u) = L^deg · p(u/L) has Gaussian-integer coefficients
    let mut scale = BigInt::one();
    for c in coeffs {
        scale = scale.lcm(c.re.denom());
        scale = scale.lcm(c.im.denom());
    }
    let mut ipoly: Vec<GaussInt> = Vec::with_capacity(coeffs.len());
    let mut power = Rational::one();
    let scale_rat = Rational::from_integer(scale.clone());
    for c in coeffs {
        let re = &c.re * &power;
        let im = &c.im * &power;
        debug_assert!(re.is_integer() && im.is_integer());
        ipoly.push(GaussInt::new(re.to_integer(), im.to_integer()));
        power *= &scale_rat;
    }

    let int_hints: Vec<GaussInt> = hints
        .iter()
        .filter_map(|h| {
            let re = &h.re * &scale_rat;
            let im = &h.im * &scale_rat;
            (re.is_integer() && im.is_integer())
                .then(|| GaussInt::new(re.to_integer(), im.to_integer()))
        })
        .collect();

    let mut roots: Vec<(GaussInt, usize)> = Vec::new();
    let mut poly = ipoly;
    while poly.len() > 1 {
        // strip zero roots first: they need no candidate search
        if poly.last().expect("nonempty").is_zero() {
            let mult = poly.iter().rev().take_while(|c| c.is_zero()).count();
            poly.truncate(poly.len() - mult);
            roots.push((GaussInt::zero(), mult));
            continue;
        }
        let constant = poly.last().expect("nonempty").clone();
        let mut candidates: Vec<GaussInt> = Vec::new();
        for h in &int_hints {
            candidates.extend(h.unit_multiples());
        }
        if let Some(divs) = divisors_up_to_units(&constant) {
            for d in divs {
                candidates.extend(d.unit_multiples());
            }
        }
        candidates.sort_by_key(|c| (c.norm(), c.re.clone(), c.im.clone()));
        candidates.dedup();
        let found = candidates.into_iter().find(|c| eval(&poly, c).is_zero());
        let Some(root) = found else {
            return Err(SpectralError::NonSplittingSpectrum {
                remaining_degree: poly.len() - 1,
            });
        };
        let mut mult = 0;
        while let Some(deflated) = deflate(&poly, &root) {
            poly = deflated;
            mult += 1;
        }
        debug_assert!(mult >= 1);
        roots.push((root, mult));
    }

    // map back through the scaling and check hint strictness
    let inv_scale = GaussianRational::new(
        Rational::new(BigInt::one(), scale.clone()),
        num_traits::Zero::zero(),
    );
    let mut out: Vec<(GaussianRational, usize)> = roots
        .into_iter()
        .map(|(r, m)| (&r.to_gaussian_rational() * &inv_scale, m))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    for h in hints {
        if !out.iter().any(|(r, _)| r == h) {
            return Err(SpectralError::DefectiveHint {
                value: h.to_string(),
            });
        }
    }
    Ok(out)
}

fn eval(poly: &[GaussInt], x: &GaussInt) -> GaussInt {
    let mut acc = GaussInt::zero();
    for c in poly {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Synthetic division by (t - r); `None` when r is not a root.
fn deflate(poly: &[GaussInt], r: &GaussInt) -> Option<Vec<GaussInt>> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut acc = GaussInt::zero();
    for c in &poly[..poly.len() - 1] {
        acc = acc.mul(r).add(c);
        out.push(acc.clone());
    }
    let remainder = acc.mul(r).add(poly.last().expect("nonempty"));
    remainder.is_zero().then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, ratio};

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_i64(n)
    }

    fn run(coeffs: Vec<GaussianRational>) -> Vec<(GaussianRational, usize)> {
        monic_gaussian_roots(&coeffs, &[]).unwrap()
    }

    #[test]
    fn splits_integer_spectra() {
        // (t-1)(t+1) = t² - 1
        assert_eq!(
            run(vec![gi(1), gi(0), gi(-1)]),
            vec![(gi(-1), 1), (gi(1), 1)]
        );
        // t² + 1 = (t-i)(t+i)
        assert_eq!(
            run(vec![gi(1), gi(0), gi(1)]),
            vec![
                (GaussianRational::new(rat(0), rat(-1)), 1),
                (GaussianRational::i(), 1)
            ]
        );
        // t³: triple zero
        assert_eq!(run(vec![gi(1), gi(0), gi(0), gi(0)]), vec![(gi(0), 3)]);
    }

    #[test]
    fn splits_rational_and_repeated_roots() {
        // (t - 1/2)² = t² - t + 1/4
        let half = GaussianRational::new(ratio(1, 2), rat(0));
        assert_eq!(
            run(vec![
                gi(1),
                gi(-1),
                GaussianRational::new(ratio(1, 4), rat(0))
            ]),
            vec![(half, 2)]
        );
        // (t - (1+i))(t - (1-i)) = t² - 2t + 2
        let roots = run(vec![gi(1), gi(-2), gi(2)]);
        assert_eq!(
            roots,
            vec![
                (GaussianRational::new(rat(1), rat(-1)), 1),
                (GaussianRational::new(rat(1), rat(1)), 1)
            ]
        );
    }

    #[test]
    fn refuses_irrational_spectra() {
        // t² - 2 has no root in Q(i)
        let err = monic_gaussian_roots(&[gi(1), gi(0), gi(-2)], &[]).unwrap_err();
        assert!(matches!(
            err,
            SpectralError::NonSplittingSpectrum {
                remaining_degree: 2
            }
        ));
    }

    #[test]
    fn hints_are_strict() {
        let err = monic_gaussian_roots(&[gi(1), gi(0), gi(-1)], &[gi(3)]).unwrap_err();
        assert!(matches!(err, SpectralError::DefectiveHint { .. }));
        // a correct hint passes through
        let ok = monic_gaussian_roots(&[gi(1), gi(0), gi(-1)], &[gi(1)]).unwrap();
        assert_eq!(ok.len(), 2);
    }
}
