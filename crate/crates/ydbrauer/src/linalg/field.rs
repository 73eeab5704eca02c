//! Exact scalars: GF(p) for a prime p, or arbitrary-precision rationals.
//!
//! GF(p) elements are stored as canonical residues 0 <= e < p in a u64.
//! Rationals are `num_rational::BigRational`, which keeps gcd(num, den) = 1
//! and den > 0 by construction, so every stored value is already canonical.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus we accept. The dense kernels accumulate products
/// of residues in u64 with deferred reduction, which needs (p-1)^2 to leave
/// headroom; capping p below 2^31 keeps that arithmetic overflow-free.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// GF(p), p prime.
    Prime(u64),
    /// The rational numbers with arbitrary-precision integers.
    Rationals,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// GF(p) with the primality of `p` checked by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadParameter(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::BadParameter(format!(
                "prime modulus {p} exceeds the supported bound {MAX_PRIME}"
            )));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime(p) => Some(*p),
            FieldSpec::Rationals => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldSpec::Prime(_) => FieldElement::Fp(0),
            FieldSpec::Rationals => FieldElement::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldSpec::Prime(_) => FieldElement::Fp(1),
            FieldSpec::Rationals => FieldElement::Rat(BigRational::one()),
        }
    }

    /// Canonical element from a signed integer.
    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            FieldSpec::Prime(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                FieldElement::Fp(r)
            }
            FieldSpec::Rationals => FieldElement::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        match (self, a) {
            (FieldSpec::Prime(p), FieldElement::Fp(v)) if v < p => Ok(()),
            (FieldSpec::Rationals, FieldElement::Rat(_)) => Ok(()),
            _ => Err(Error::FieldMismatch(format!("element {a} does not belong to {self}"))),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (FieldSpec::Prime(p), FieldElement::Fp(x), FieldElement::Fp(y)) => {
                FieldElement::Fp((x + y) % p)
            }
            (_, FieldElement::Rat(x), FieldElement::Rat(y)) => FieldElement::Rat(x + y),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.add(a, &self.neg(b)?)
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(match (self, a) {
            (FieldSpec::Prime(p), FieldElement::Fp(x)) => {
                FieldElement::Fp(if *x == 0 { 0 } else { p - x })
            }
            (_, FieldElement::Rat(x)) => FieldElement::Rat(-x),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (FieldSpec::Prime(p), FieldElement::Fp(x), FieldElement::Fp(y)) => {
                FieldElement::Fp((x * y) % p)
            }
            (_, FieldElement::Rat(x), FieldElement::Rat(y)) => FieldElement::Rat(x * y),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        match (self, a) {
            (FieldSpec::Prime(p), FieldElement::Fp(x)) => {
                if *x == 0 {
                    Err(Error::Singular("division by zero in GF(p)".into()))
                } else {
                    Ok(FieldElement::Fp(inv_mod(*x, *p)))
                }
            }
            (_, FieldElement::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::Singular("division by zero in Q".into()))
                } else {
                    Ok(FieldElement::Rat(x.recip()))
                }
            }
            _ => unreachable!(),
        }
    }

    /// Parse a decimal scalar string: an optionally signed integer, or a
    /// fraction "a/b". Fractions reduce into GF(p) via b^{-1} mod p.
    pub fn parse_scalar(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let bad = |m: &str| Error::parse(format!("scalar {s:?}"), m.to_string());
        match self {
            FieldSpec::Rationals => {
                let r = BigRational::from_str(s).map_err(|e| bad(&e.to_string()))?;
                Ok(FieldElement::Rat(r))
            }
            FieldSpec::Prime(p) => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let n = BigInt::from_str(num).map_err(|e| bad(&e.to_string()))?;
                let p_big = BigInt::from(*p);
                let mut r = ((&n % &p_big) + &p_big) % &p_big;
                if let Some(d) = den {
                    let d = BigInt::from_str(d).map_err(|e| bad(&e.to_string()))?;
                    let dm = (((&d % &p_big) + &p_big) % &p_big)
                        .to_string()
                        .parse::<u64>()
                        .expect("reduced residue fits in u64");
                    if dm == 0 {
                        return Err(bad("denominator is zero in GF(p)"));
                    }
                    r = (r * BigInt::from(inv_mod(dm, *p))) % &p_big;
                }
                let v = r.to_string().parse::<u64>().expect("reduced residue fits in u64");
                Ok(FieldElement::Fp(v))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

/// One exact scalar. Always canonical: GF(p) residues live in 0..p, and
/// BigRational is reduced with a positive denominator by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Fp(u64),
    Rat(BigRational),
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Fp(v) => *v == 0,
            FieldElement::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Fp(v) => *v == 1,
            FieldElement::Rat(r) => r.is_one(),
        }
    }

    /// True when the stored value is in canonical form for `field`.
    pub fn is_canonical(&self, field: &FieldSpec) -> bool {
        match (field, self) {
            (FieldSpec::Prime(p), FieldElement::Fp(v)) => v < p,
            (FieldSpec::Rationals, FieldElement::Rat(r)) => {
                r.denom().is_positive()
                    && num_integer::gcd(r.numer().clone(), r.denom().clone()).is_one()
            }
            _ => false,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Fp(v) => write!(f, "{v}"),
            FieldElement::Rat(r) => write!(f, "{r}"),
        }
    }
}

/// Modular inverse by Fermat (p prime, 0 < a < p).
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Barrett reduction for a fixed modulus: one multiply-high instead of a
/// hardware division in the elimination inner loops. The multiplier m
/// underestimates 2^64/p, so q never exceeds x/p and the remainder only
/// needs a couple of correcting subtractions.
#[derive(Clone, Copy)]
pub(crate) struct Barrett {
    p: u64,
    m: u64,
}

impl Barrett {
    pub fn new(p: u64) -> Self {
        debug_assert!(p >= 2);
        Barrett { p, m: u64::MAX / p }
    }

    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.m as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }
}
