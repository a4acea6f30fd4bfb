//! Parsers for the canonical scalar string forms.
//!
//! Grammar (whitespace ignored): a sum of signed terms, each a rational
//! coefficient, a unit `i`/`j`/`k`, or `coeff*unit` (the `*` may be
//! omitted). Zero terms may be omitted; an empty coefficient next to a unit
//! means 1. Examples: `-3/2`, `1/2-3/4*i`, `j`, `1+2i+3j+4k`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{GaussianRational, Rational, RationalQuaternion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("unit {unit:?} not allowed in {context}")]
    UnitOutOfRange { unit: char, context: &'static str },
}

/// One parsed `±coeff·unit` term; `unit` is 0 for the real part, 1..=3 for
/// i, j, k.
struct Term {
    coeff: Rational,
    unit: usize,
}

fn parse_uint(s: &mut &str) -> Option<BigInt> {
    let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
    if digits.is_empty() {
        return None;
    }
    *s = &s[digits.len()..];
    Some(digits.parse().expect("digit string parses"))
}

fn parse_terms(input: &str) -> Result<Vec<Term>, ParseScalarError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let malformed = || ParseScalarError::Malformed(input.to_string());
    let mut rest = compact.as_str();
    let mut terms = Vec::new();
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        match rest.chars().next() {
            Some('+') => rest = &rest[1..],
            Some('-') => {
                negative = true;
                rest = &rest[1..];
            }
            _ if first => {}
            _ => return Err(malformed()),
        }
        first = false;
        let numer = parse_uint(&mut rest);
        let denom = if rest.starts_with('/') {
            rest = &rest[1..];
            let d = parse_uint(&mut rest).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(input.to_string()));
            }
            Some(d)
        } else {
            None
        };
        if rest.starts_with('*') {
            if numer.is_none() {
                return Err(malformed());
            }
            rest = &rest[1..];
        }
        let unit = match rest.chars().next() {
            Some(c @ ('i' | 'j' | 'k')) => {
                rest = &rest[1..];
                match c {
                    'i' => 1,
                    'j' => 2,
                    _ => 3,
                }
            }
            _ => 0,
        };
        if numer.is_none() && unit == 0 {
            return Err(malformed());
        }
        let mut coeff = Rational::new(
            numer.unwrap_or_else(|| BigInt::from(1)),
            denom.unwrap_or_else(|| BigInt::from(1)),
        );
        if negative {
            coeff = -coeff;
        }
        terms.push(Term { coeff, unit });
    }
    Ok(terms)
}

fn assemble(
    input: &str,
    max_unit: usize,
    context: &'static str,
) -> Result<[Rational; 4], ParseScalarError> {
    let mut coords = [
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    for term in parse_terms(input)? {
        if term.unit > max_unit {
            let unit = ['1', 'i', 'j', 'k'][term.unit];
            return Err(ParseScalarError::UnitOutOfRange { unit, context });
        }
        coords[term.unit] = &coords[term.unit] + &term.coeff;
    }
    Ok(coords)
}

pub(super) fn parse_rational(input: &str) -> Result<Rational, ParseScalarError> {
    let [a, _, _, _] = assemble(input, 0, "a rational")?;
    Ok(a)
}

pub(super) fn parse_gaussian(input: &str) -> Result<GaussianRational, ParseScalarError> {
    let [re, im, _, _] = assemble(input, 1, "a Gaussian rational")?;
    Ok(GaussianRational::new(re, im))
}

pub(super) fn parse_quaternion(input: &str) -> Result<RationalQuaternion, ParseScalarError> {
    let [a0, a1, a2, a3] = assemble(input, 3, "a quaternion")?;
    Ok(RationalQuaternion::new(a0, a1, a2, a3))
}
