use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Exact rational number, always normalized to lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `"p/q"` string; the denominator is always written.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Precondition(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Default working prime for random sampling.
pub const DEFAULT_PRIME: u64 = 10007;

/// Coefficient domain: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "kebab-case")]
pub enum CoeffField {
    Rationals,
    PrimeField(u64),
}

impl CoeffField {
    /// A prime field usable for forms of degree `d`: `p` must be prime and
    /// exceed `2d`. Moduli are capped below 2^32 so products fit in `u64`.
    pub fn prime(p: u64, d: usize) -> Result<Self> {
        let reject = |reason: &str| Error::InvalidModulus {
            modulus: p,
            reason: reason.to_string(),
        };
        if p >= 1 << 32 {
            return Err(reject("modulus must be below 2^32"));
        }
        if !is_prime(p) {
            return Err(reject("not prime"));
        }
        if p <= 2 * d as u64 {
            return Err(reject(&format!("must exceed 2d = {}", 2 * d)));
        }
        Ok(CoeffField::PrimeField(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match *self {
            CoeffField::Rationals => Scalar::Q(rat_int(n)),
            CoeffField::PrimeField(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_rational(&self, r: &Rational) -> Result<Scalar> {
        match *self {
            CoeffField::Rationals => Ok(Scalar::Q(r.clone())),
            CoeffField::PrimeField(p) => {
                let pb = BigInt::from(p);
                let num = r.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let den = r.denom().mod_floor(&pb).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Precondition(format!(
                        "denominator of {r} vanishes mod {p}"
                    )));
                }
                let n = Scalar::Fp { v: num, p };
                let d = Scalar::Fp { v: den, p };
                Ok(n.div_exact(&d).expect("nonzero denominator"))
            }
        }
    }

    /// Uniform element of the prime field, or a small integer in
    /// `[-bound, bound]` over the rationals.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        match *self {
            CoeffField::Rationals => self.from_int(rng.random_range(-bound..=bound)),
            CoeffField::PrimeField(p) => Scalar::Fp {
                v: rng.random_range(0..p),
                p,
            },
        }
    }

    pub fn random_nonzero<R: rand::Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Scalar {
        loop {
            let x = self.random(rng, bound);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Number of distinct elements available for sampling, if finite.
    pub fn size(&self) -> Option<u64> {
        match *self {
            CoeffField::Rationals => None,
            CoeffField::PrimeField(p) => Some(p),
        }
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffField::Rationals => write!(f, "QQ"),
            CoeffField::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Element of a [`CoeffField`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> CoeffField {
        match *self {
            Scalar::Q(_) => CoeffField::Rationals,
            Scalar::Fp { p, .. } => CoeffField::PrimeField(p),
        }
    }

    /// Rational view: the value itself over QQ, the canonical
    /// representative in `[0, p)` over a prime field.
    pub fn to_rational(&self) -> Rational {
        match self {
            Scalar::Q(r) => r.clone(),
            Scalar::Fp { v, .. } => rat_int(*v as i64),
        }
    }

    fn fp_pow(v: u64, mut e: u64, p: u64) -> u64 {
        let mut base = v % p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    fn expect_same(&self, other: &Self) {
        assert!(
            self.same_domain(other),
            "scalar domain mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        self.expect_same(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.expect_same(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: a * b % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.expect_same(rhs);
        if rhs.is_zero() {
            return None;
        }
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Some(Scalar::Q(a / b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Some(Scalar::Fp {
                v: a * Scalar::fp_pow(*b, p - 2, *p) % p,
                p: *p,
            }),
            _ => unreachable!(),
        }
    }

    fn same_domain(&self, other: &Self) -> bool {
        self.field() == other.field()
    }

    fn domain_label(&self) -> String {
        self.field().to_string()
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.field().from_int(n)
    }

    fn from_bigint_like(&self, n: &BigInt) -> Self {
        match self.field() {
            CoeffField::Rationals => Scalar::Q(Rational::from_integer(n.clone())),
            CoeffField::PrimeField(p) => Scalar::Fp {
                v: n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced"),
                p,
            },
        }
    }
}

/// Euclidean distance squared between two rational vectors.
pub fn dist2(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Floor of a rational as `i64`.
pub fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("floor fits in i64")
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs_rat(r: &Rational) -> Rational {
    r.abs()
}
