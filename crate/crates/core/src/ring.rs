//! Coefficient rings and their exact scalar arithmetic.
//!
//! Everything is exact: integers and rationals are arbitrary precision,
//! Z/m stores canonical residues. There is no floating point anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient ring of a module: Z, Q, or Z/m with m >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    Mod(u64),
}

/// A single ring element. The variant must match the ring it is used with;
/// matrix operations check this.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

impl CoefficientRing {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" => Ok(CoefficientRing::Integers),
            "Q" => Ok(CoefficientRing::Rationals),
            other => {
                if let Some(m) = other.strip_prefix("Z/") {
                    let m: u64 = m
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad modulus in ring {other:?}")))?;
                    if m < 2 {
                        return Err(Error::Parse(format!("modulus must be >= 2, got {m}")));
                    }
                    Ok(CoefficientRing::Mod(m))
                } else {
                    Err(Error::Parse(format!("unknown ring {other:?}")))
                }
            }
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            CoefficientRing::Rationals => true,
            CoefficientRing::Mod(m) => is_prime(*m),
            CoefficientRing::Integers => false,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoefficientRing::Integers => Scalar::Int(BigInt::zero()),
            CoefficientRing::Rationals => Scalar::Rat(BigRational::zero()),
            CoefficientRing::Mod(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            CoefficientRing::Integers => Scalar::Int(BigInt::one()),
            CoefficientRing::Rationals => Scalar::Rat(BigRational::one()),
            CoefficientRing::Mod(_) => Scalar::Mod(1 % self.modulus()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            CoefficientRing::Integers => Scalar::Int(BigInt::from(v)),
            CoefficientRing::Rationals => Scalar::Rat(BigRational::from(BigInt::from(v))),
            CoefficientRing::Mod(m) => Scalar::Mod(v.rem_euclid(*m as i64) as u64),
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            CoefficientRing::Mod(m) => *m,
            _ => panic!("modulus requested for a ring without one"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientRing::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (CoefficientRing::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (CoefficientRing::Mod(m), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % *m as u128) as u64)
            }
            _ => panic!("scalar/ring mismatch in add"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (CoefficientRing::Integers, Scalar::Int(x)) => Scalar::Int(-x),
            (CoefficientRing::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (CoefficientRing::Mod(m), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { m - x })
            }
            _ => panic!("scalar/ring mismatch in neg"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (CoefficientRing::Integers, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (CoefficientRing::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (CoefficientRing::Mod(m), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *m as u128) as u64)
            }
            _ => panic!("scalar/ring mismatch in mul"),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    /// Multiplicative inverse if `a` is a unit of the ring.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (CoefficientRing::Integers, Scalar::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Some(Scalar::Int(x.clone()))
                } else {
                    None
                }
            }
            (CoefficientRing::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            (CoefficientRing::Mod(m), Scalar::Mod(x)) => mod_inv(*x, *m).map(Scalar::Mod),
            _ => panic!("scalar/ring mismatch in inv"),
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inv(a).is_some()
    }

    /// Formats per the wire format: decimal integers, rationals as "p/q"
    /// (plain decimal when the denominator is 1), residues as decimals.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Int(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(x) => x.to_string(),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        match self {
            CoefficientRing::Integers => {
                Ok(Scalar::Int(BigInt::from_str(s).map_err(|_| bad())?))
            }
            CoefficientRing::Rationals => {
                if let Some((p, q)) = s.split_once('/') {
                    let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                    let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                    if q.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(p, q)))
                } else {
                    let p = BigInt::from_str(s).map_err(|_| bad())?;
                    Ok(Scalar::Rat(BigRational::from(p)))
                }
            }
            CoefficientRing::Mod(m) => {
                let v = BigInt::from_str(s).map_err(|_| bad())?;
                let r = v.mod_floor(&BigInt::from(*m));
                let (_, digits) = r.to_u64_digits();
                Ok(Scalar::Mod(digits.first().copied().unwrap_or(0)))
            }
        }
    }

    /// Reinterprets an integer scalar in this ring (used when lifting
    /// builtin constructions defined over Z to Q or Z/m).
    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            CoefficientRing::Integers => Scalar::Int(v.clone()),
            CoefficientRing::Rationals => Scalar::Rat(BigRational::from(v.clone())),
            CoefficientRing::Mod(m) => {
                let r = v.mod_floor(&BigInt::from(*m));
                let (_, digits) = r.to_u64_digits();
                Scalar::Mod(digits.first().copied().unwrap_or(0))
            }
        }
    }

    /// Canonical integer representative, for lifting Z/m entries to Z.
    pub fn lift_to_int(&self, a: &Scalar) -> Result<BigInt> {
        match a {
            Scalar::Int(x) => Ok(x.clone()),
            Scalar::Mod(x) => Ok(BigInt::from(*x)),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    Ok(x.numer().clone())
                } else {
                    Err(Error::UnsupportedRing(
                        "cannot lift a non-integral rational to Z".into(),
                    ))
                }
            }
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Rationals => write!(f, "Q"),
            CoefficientRing::Mod(m) => write!(f, "Z/{m}"),
        }
    }
}

fn mod_inv(a: u64, m: u64) -> Option<u64> {
    // extended Euclid on (a, m); inverse exists iff gcd = 1
    let (mut r0, mut r1) = (a as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 == 1 {
        Some(s0.rem_euclid(m as i128) as u64)
    } else {
        None
    }
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m % 2 == 0 {
        return m == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= m) {
        if m % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Signed magnitude used by pivot selection in the Smith normal form.
pub fn int_abs(v: &BigInt) -> BigInt {
    v.abs()
}
