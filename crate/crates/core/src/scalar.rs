//! The max-plus semifield over exact rationals.
//!
//! `TropScalar` is either a finite rational or the bottom element `-inf`.
//! Tropical addition is `max`, tropical multiplication is ordinary `+`, and
//! `-inf` is neutral for the first and absorbing for the second.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Result, TropError};

/// Exact rational used for every finite coordinate in the kernel.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Build the rational `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p/q"`, an integer, or a decimal such as `"-1.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || TropError::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = parse_integer(num.trim()).ok_or_else(err)?;
        let d = parse_integer(den.trim()).ok_or_else(err)?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().map_err(|_| err())?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let q = Rational::new(numer, denom);
    Ok(if negative { -q } else { q })
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix('+').unwrap_or(s);
    let digits = body.strip_prefix('-').unwrap_or(body);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    body.parse().ok()
}

/// An element of the tropical semifield: a finite rational or `-inf`.
///
/// The derived order puts `NegInf` below every finite value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    NegInf,
    Finite(Rational),
}

impl TropScalar {
    pub fn zero() -> Self {
        TropScalar::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        TropScalar::Finite(rat(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            TropScalar::NegInf => None,
        }
    }

    /// Tropical sum `max(self, other)`.
    pub fn oplus(&self, other: &TropScalar) -> TropScalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product `self + other`, with `-inf` absorbing.
    pub fn odot(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::Finite(x), TropScalar::Finite(y)) => TropScalar::Finite(x + y),
            _ => TropScalar::NegInf,
        }
    }

    /// Shift a finite value by `q`; `-inf` is unchanged.
    pub fn shift(&self, q: &Rational) -> TropScalar {
        match self {
            TropScalar::Finite(x) => TropScalar::Finite(x + q),
            TropScalar::NegInf => TropScalar::NegInf,
        }
    }

    /// `k`-fold tropical power: `k * self`. The zeroth power is `0`.
    pub fn pow(&self, k: u32) -> TropScalar {
        if k == 0 {
            return TropScalar::zero();
        }
        match self {
            TropScalar::Finite(x) => TropScalar::Finite(x * rat(k as i64)),
            TropScalar::NegInf => TropScalar::NegInf,
        }
    }
}

/// Tropical addition.
pub fn trop_add(x: &TropScalar, y: &TropScalar) -> TropScalar {
    x.oplus(y)
}

/// Tropical multiplication.
pub fn trop_mul(x: &TropScalar, y: &TropScalar) -> TropScalar {
    x.odot(y)
}

impl From<Rational> for TropScalar {
    fn from(q: Rational) -> Self {
        TropScalar::Finite(q)
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::int(n)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::Finite(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for TropScalar {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("-inf") {
            return Ok(TropScalar::NegInf);
        }
        parse_rational(t).map(TropScalar::Finite).map_err(|_| TropError::Parse {
            what: "tropical scalar",
            input: s.to_string(),
        })
    }
}

/// Absolute value helper used by lattice-length computations.
pub(crate) fn abs(q: &Rational) -> Rational {
    q.abs()
}
