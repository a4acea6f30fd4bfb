//! Characteristic polynomial by the Faddeev–LeVerrier recurrence, exact
//! over ℚ(i). Returns coefficients in descending powers, leading 1.

use crate::matrices::MatrixC;
use crate::scalars::{rat, GaussianRational, Rational};

pub fn char_poly(x: &MatrixC) -> Vec<GaussianRational> {
    assert!(x.is_square());
    let n = x.rows();
    let mut coeffs = vec![GaussianRational::one()];
    if n == 0 {
        return coeffs;
    }
    let mut m = x.clone();
    for k in 1..=n {
        if k > 1 {
            // M_k = X·(M_{k-1} + c_{k-1}·I)
            let mut shifted = m.clone();
            let c_prev = coeffs.last().unwrap().clone();
            for i in 0..n {
                let v = shifted.at(i, i) + &c_prev;
                shifted.set(i, i, v);
            }
            m = x.mul(&shifted);
        }
        let divisor = GaussianRational::new(Rational::new((k as i64).into(), 1.into()), rat(0));
        let c = -&(&m.trace() / &divisor);
        coeffs.push(c);
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::Matrix;

    fn gi(n: i64) -> GaussianRational {
        GaussianRational::from_i64(n)
    }

    #[test]
    fn small_characteristic_polynomials() {
        // J(2,0): t^2
        let j = Matrix::from_rows(vec![vec![gi(0), gi(1)], vec![gi(0), gi(0)]]);
        assert_eq!(char_poly(&j), vec![gi(1), gi(0), gi(0)]);
        // diag(1,-1): t^2 - 1
        let d = MatrixC::diagonal(&[gi(1), gi(-1)]);
        assert_eq!(char_poly(&d), vec![gi(1), gi(0), gi(-1)]);
        // rotation [[0,1],[-1,0]]: t^2 + 1
        let r = Matrix::from_rows(vec![vec![gi(0), gi(1)], vec![gi(-1), gi(0)]]);
        assert_eq!(char_poly(&r), vec![gi(1), gi(0), gi(1)]);
        // companion-style 3x3 with eigenvalues 1, 2, 3: t^3 - 6t^2 + 11t - 6
        let m = Matrix::from_rows(vec![
            vec![gi(1), gi(4), gi(0)],
            vec![gi(0), gi(2), gi(0)],
            vec![gi(5), gi(-1), gi(3)],
        ]);
        assert_eq!(char_poly(&m), vec![gi(1), gi(-6), gi(11), gi(-6)]);
    }
}
