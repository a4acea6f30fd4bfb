//! Exact scalar arithmetic: rationals, Gaussian rationals, and rational
//! quaternions.
//!
//! Everything downstream (matrices, Jordan forms, certificates) is built on
//! these three towers. All coordinates are arbitrary-precision rationals, so
//! every identity we ever assert (`gXg⁻¹ = -X`, `g² = I`, `det g = 1`) is
//! decided with zero tolerance.

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $method:ident) => {
        impl $trait for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

mod gaussian;
mod parse;
mod quaternion;

pub use gaussian::GaussianRational;
pub use parse::ParseScalarError;
pub use quaternion::RationalQuaternion;

use num_bigint::BigInt;

/// Exact rational number with arbitrary-precision numerator and positive
/// denominator, always in lowest terms. `num_rational` maintains exactly the
/// invariants we need (gcd = 1, denominator > 0), so we use it directly.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for a rational fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Minimal scalar interface shared by the three towers. Multiplication is
/// not assumed commutative; generic code must keep left and right factors
/// in the order the mathematics dictates.
pub trait Scalar: Clone + PartialEq + Eq + std::fmt::Display + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Two-sided multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Conjugation: identity on rationals, complex conjugation on Gaussian
    /// rationals, quaternion conjugation on quaternions.
    fn conj(&self) -> Self;
    /// Canonical string form, re-parsed by [`Scalar::parse`].
    fn render(&self) -> String {
        format!("{self}")
    }
    fn parse(s: &str) -> Result<Self, ParseScalarError>;
}

/// Parse a rational in canonical `p/q` (or plain `p`) form.
pub fn parse_rational(s: &str) -> Result<Rational, ParseScalarError> {
    parse::parse_rational(s)
}
