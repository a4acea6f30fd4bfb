//! Hamilton's quaternions restricted to rational coordinates.
//!
//! Multiplication follows i² = j² = k² = -1 and ij = -ji = k, jk = -kj = i,
//! ki = -ik = j. The split ℍ = ℂ ⊕ ℂj identifies the complex plane with the
//! span of 1 and i.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::gaussian::GaussianRational;
use super::parse::{self, ParseScalarError};
use super::{rat, Rational, Scalar};

/// `a0 + a1·i + a2·j + a3·k` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQuaternion {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
}

impl RationalQuaternion {
    pub fn new(a0: Rational, a1: Rational, a2: Rational, a3: Rational) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::new(rat(n), rat(0), rat(0), rat(0))
    }

    pub fn zero() -> Self {
        Self::from_i64(0)
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn i() -> Self {
        Self::new(rat(0), rat(1), rat(0), rat(0))
    }

    pub fn j() -> Self {
        Self::new(rat(0), rat(0), rat(1), rat(0))
    }

    pub fn k() -> Self {
        Self::new(rat(0), rat(0), rat(0), rat(1))
    }

    /// Embed a complex number via ℂ = ℝ ⊕ ℝi ⊂ ℍ.
    pub fn from_complex(z: &GaussianRational) -> Self {
        Self::new(z.re.clone(), z.im.clone(), rat(0), rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero() && self.a2.is_zero() && self.a3.is_zero()
    }

    /// True when the j and k coordinates vanish, i.e. the value lies in the
    /// distinguished copy of ℂ.
    pub fn is_complex(&self) -> bool {
        self.a2.is_zero() && self.a3.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(
            self.a0.clone(),
            -self.a1.clone(),
            -self.a2.clone(),
            -self.a3.clone(),
        )
    }

    /// `q·q̄ = a0² + a1² + a2² + a3²`, a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        &self.a0 * &self.a0 + &self.a1 * &self.a1 + &self.a2 * &self.a2 + &self.a3 * &self.a3
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        let c = self.conjugate();
        Some(Self::new(c.a0 / &n, c.a1 / &n, c.a2 / &n, c.a3 / &n))
    }

    /// Split `q = z1 + z2·j` with `z1, z2 ∈ ℚ(i)` (the j-on-the-right split
    /// used by the Φ embedding). Reassembly via [`Self::from_complex_pair`]
    /// is the identity.
    pub fn complex_split(&self) -> (GaussianRational, GaussianRational) {
        (
            GaussianRational::new(self.a0.clone(), self.a1.clone()),
            GaussianRational::new(self.a2.clone(), self.a3.clone()),
        )
    }

    /// Reassemble `z1 + z2·j`.
    pub fn from_complex_pair(z1: &GaussianRational, z2: &GaussianRational) -> Self {
        Self::new(z1.re.clone(), z1.im.clone(), z2.re.clone(), z2.im.clone())
    }
}

impl Add for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn add(self, rhs: &RationalQuaternion) -> RationalQuaternion {
        RationalQuaternion::new(
            &self.a0 + &rhs.a0,
            &self.a1 + &rhs.a1,
            &self.a2 + &rhs.a2,
            &self.a3 + &rhs.a3,
        )
    }
}

impl Sub for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn sub(self, rhs: &RationalQuaternion) -> RationalQuaternion {
        RationalQuaternion::new(
            &self.a0 - &rhs.a0,
            &self.a1 - &rhs.a1,
            &self.a2 - &rhs.a2,
            &self.a3 - &rhs.a3,
        )
    }
}

impl Mul for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn mul(self, rhs: &RationalQuaternion) -> RationalQuaternion {
        let (a0, a1, a2, a3) = (&self.a0, &self.a1, &self.a2, &self.a3);
        let (b0, b1, b2, b3) = (&rhs.a0, &rhs.a1, &rhs.a2, &rhs.a3);
        RationalQuaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Neg for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn neg(self) -> RationalQuaternion {
        RationalQuaternion::new(
            -self.a0.clone(),
            -self.a1.clone(),
            -self.a2.clone(),
            -self.a3.clone(),
        )
    }
}

forward_owned_binop!(RationalQuaternion, Add, add);
forward_owned_binop!(RationalQuaternion, Sub, sub);
forward_owned_binop!(RationalQuaternion, Mul, mul);

impl Neg for RationalQuaternion {
    type Output = RationalQuaternion;
    fn neg(self) -> RationalQuaternion {
        -&self
    }
}

impl fmt::Display for RationalQuaternion {
    /// Canonical form `a+b*i+c*j+d*k` with zero terms omitted; zero prints
    /// as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        let mut term = |f: &mut fmt::Formatter<'_>, coeff: &Rational, unit: &str| -> fmt::Result {
            if coeff.is_zero() {
                return Ok(());
            }
            if wrote && !coeff.is_negative() {
                write!(f, "+")?;
            }
            if unit.is_empty() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff}*{unit}")?;
            }
            wrote = true;
            Ok(())
        };
        term(f, &self.a0, "")?;
        term(f, &self.a1, "i")?;
        term(f, &self.a2, "j")?;
        term(f, &self.a3, "k")?;
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Scalar for RationalQuaternion {
    fn zero() -> Self {
        RationalQuaternion::zero()
    }
    fn one() -> Self {
        RationalQuaternion::one()
    }
    fn is_zero(&self) -> bool {
        RationalQuaternion::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn conj(&self) -> Self {
        self.conjugate()
    }
    fn parse(s: &str) -> Result<Self, ParseScalarError> {
        parse::parse_quaternion(s)
    }
}
