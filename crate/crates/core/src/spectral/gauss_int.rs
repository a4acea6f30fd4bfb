//! Gaussian-integer arithmetic: Euclidean division and gcd, prime
//! splitting of rational primes, divisor enumeration, and exact n-th roots.
//!
//! This backs the eigenvalue search: every ℚ(i)-rational root of a monic
//! ℤ[i]-polynomial is a Gaussian integer dividing the constant term, so a
//! complete candidate list is the divisor set times the four units. Norm
//! factorization uses trial division plus deterministic Miller–Rabin; a
//! constant term whose norm we cannot factor leads to a clean refusal
//! upstream, never to an approximation.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalars::{GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re.into(), im.into())
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn i() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == BigUint::one()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn norm(&self) -> BigUint {
        (&self.re * &self.re + &self.im * &self.im)
            .to_biguint()
            .expect("norm is nonnegative")
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let num = self.mul(&d.conj());
        let den = BigInt::from(d.norm());
        let (qr, rr) = num.re.div_rem(&den);
        let (qi, ri) = num.im.div_rem(&den);
        if rr.is_zero() && ri.is_zero() {
            Some(Self::new(qr, qi))
        } else {
            None
        }
    }

    /// Euclidean division with rounded quotient; remainder norm < divisor
    /// norm.
    pub fn div_round(&self, d: &Self) -> Self {
        let num = self.mul(&d.conj());
        let den = BigInt::from(d.norm());
        Self::new(round_div(&num.re, &den), round_div(&num.im, &den))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let q = a.div_round(&b);
            let r = a.sub(&q.mul(&b));
            a = b;
            b = r;
        }
        a
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_gaussian_rational(&self) -> GaussianRational {
        GaussianRational::new(
            Rational::from_integer(self.re.clone()),
            Rational::from_integer(self.im.clone()),
        )
    }

    /// The four unit multiples.
    pub fn unit_multiples(&self) -> [Self; 4] {
        let i = Self::i();
        let a = self.clone();
        let b = self.mul(&i);
        [a.clone(), b.clone(), a.neg(), b.neg()]
    }
}

/// Nearest integer to n/d (ties rounded up); |n/d - q| <= 1/2, which is
/// what the Euclidean algorithm in ℤ[i] needs.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() {
        (-n.clone(), -d.clone())
    } else {
        (n.clone(), d.clone())
    };
    let num: BigInt = n * 2 + &d;
    num.div_floor(&(d * 2))
}

/// Deterministic Miller–Rabin for the BigUint range we factor.
fn is_probable_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const TRIAL_BOUND: u64 = 1_000_000;

/// Factor a positive integer; `None` when a composite residual beyond the
/// trial bound survives (callers refuse rather than guess).
pub fn factor_biguint(n: &BigUint) -> Option<Vec<(BigUint, u32)>> {
    let mut n = n.clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() {
        return None;
    }
    let mut d = 2u64;
    while d <= TRIAL_BOUND {
        let db = BigUint::from(d);
        if &db * &db > n {
            break;
        }
        let mut e = 0;
        while (&n % &db).is_zero() {
            n /= &db;
            e += 1;
        }
        if e > 0 {
            out.push((db, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigUint::one() {
        if is_probable_prime(&n) {
            out.push((n, 1));
        } else {
            let sqrt = exact_sqrt(&n)?;
            if is_probable_prime(&sqrt) {
                out.push((sqrt, 2));
            } else {
                return None;
            }
        }
    }
    Some(out)
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// A Gaussian prime of norm p, for p = 2 or p ≡ 1 (mod 4).
fn gaussian_prime_above(p: &BigUint) -> GaussInt {
    if *p == BigUint::from(2u32) {
        return GaussInt::from_i64(1, 1);
    }
    // x with x² ≡ -1 (mod p) via a quadratic nonresidue
    let one = BigUint::one();
    let exp_half = (p - &one) >> 1;
    let exp_quarter = (p - &one) >> 2;
    let p_minus_1 = p - &one;
    let mut a = BigUint::from(2u32);
    let x = loop {
        if a.modpow(&exp_half, p) == p_minus_1 {
            break a.modpow(&exp_quarter, p);
        }
        a += &one;
    };
    let candidate = GaussInt::new(BigInt::from(p.clone()), BigInt::zero())
        .gcd(&GaussInt::new(BigInt::from(x), BigInt::one()));
    assert_eq!(candidate.norm(), *p, "gcd must be a prime of norm p");
    candidate
}

/// Factor z (up to a unit) into Gaussian prime powers. `None` when the norm
/// cannot be fully factored.
pub fn gaussian_factor(z: &GaussInt) -> Option<Vec<(GaussInt, u32)>> {
    assert!(!z.is_zero());
    let norm_factors = factor_biguint(&z.norm())?;
    let mut remaining = z.clone();
    let mut out = Vec::new();
    for (p, norm_exp) in norm_factors {
        let residue = (&p % BigUint::from(4u32)).to_u32().unwrap_or(0);
        if p == BigUint::from(2u32) || residue == 1 {
            let pi = gaussian_prime_above(&p);
            for prime in [pi.clone(), pi.conj()] {
                let mut e = 0;
                while let Some(q) = remaining.exact_div(&prime) {
                    remaining = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((prime, e));
                }
            }
        } else {
            // inert prime: exponent in z is half the norm exponent
            debug_assert!(norm_exp % 2 == 0);
            let prime = GaussInt::new(BigInt::from(p.clone()), BigInt::zero());
            let mut e = 0;
            while let Some(q) = remaining.exact_div(&prime) {
                remaining = q;
                e += 1;
            }
            debug_assert_eq!(e, norm_exp / 2);
            out.push((prime, e));
        }
    }
    debug_assert!(remaining.is_unit(), "all prime content consumed");
    Some(out)
}

/// All divisors of z up to unit multiples. `None` if factoring fails.
pub fn divisors_up_to_units(z: &GaussInt) -> Option<Vec<GaussInt>> {
    let factors = gaussian_factor(z)?;
    let mut divisors = vec![GaussInt::one()];
    for (prime, exp) in factors {
        let mut extended = Vec::with_capacity(divisors.len() * (exp as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            extended.push(acc.clone());
            for _ in 0..exp {
                acc = acc.mul(&prime);
                extended.push(acc.clone());
            }
        }
        divisors = extended;
    }
    Some(divisors)
}

/// Exact n-th root of a Gaussian rational, if one exists in ℚ(i).
/// Solves αⁿ = c by searching divisors of the cleared constant term.
pub fn gaussian_nth_root(c: &GaussianRational, n: usize) -> Option<GaussianRational> {
    assert!(n >= 1);
    if c.is_zero() {
        return Some(GaussianRational::zero());
    }
    // (kα)ⁿ = kⁿ·c must be a Gaussian integer; k = lcm of denominators
    let k: BigInt = c.re.denom().lcm(c.im.denom());
    let kn = num_traits::pow::pow(k.clone(), n);
    let target_re = &c.re * Rational::from_integer(kn.clone());
    let target_im = &c.im * Rational::from_integer(kn);
    debug_assert!(target_re.is_integer() && target_im.is_integer());
    let target = GaussInt::new(target_re.to_integer(), target_im.to_integer());
    let target_norm = target.norm();
    let divisors = divisors_up_to_units(&target)?;
    // all roots differ by a 4th root of unity; return the largest in the
    // (re, im) order so that 1/2 beats -1/2 and i beats -i
    let mut best: Option<GaussInt> = None;
    for d in divisors {
        let nd = d.norm();
        if num_traits::pow::pow(nd, n) != target_norm {
            continue;
        }
        for u in d.unit_multiples() {
            if u.pow(n as u32) == target && best.as_ref().is_none_or(|b| u > *b) {
                best = Some(u);
            }
        }
    }
    best.map(|u| {
        let root = u.to_gaussian_rational();
        let kk = GaussianRational::new(Rational::new(BigInt::one(), k.clone()), Rational::zero());
        &root * &kk
    })
}
