//! Exact natural-number counts and count polynomials.
//!
//! Everything here is arbitrary precision: `C(2^d, i)` overflows 64 bits
//! long before the oracles run out of steam.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact non-negative count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `2^k`.
    pub fn pow2(k: u64) -> Self {
        Count(BigUint::one() << k)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Converts a signed value back; `None` when negative.
    pub fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_biguint().map(Count)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl std::str::FromStr for Count {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigUint>().map(Count)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a Count> for Count {
    fn add_assign(&mut self, rhs: &'a Count) {
        self.0 += &rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(self.0 * &rhs.0)
    }
}

impl Mul<u64> for Count {
    type Output = Count;
    fn mul(self, rhs: u64) -> Count {
        Count(self.0 * rhs)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Binomial coefficient with the zero convention: `C(a, b) = 0` whenever
/// `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Count {
    if a < 0 || b < 0 || b > a {
        return Count::zero();
    }
    binomial_big(&BigUint::from(a as u64), b as u64)
}

/// `C(a, b)` for a possibly huge top argument, e.g. `C(2^d, i)`.
pub fn binomial_big(a: &BigUint, b: u64) -> Count {
    if BigUint::from(b) > *a {
        return Count::zero();
    }
    // use the smaller of b and a-b when a is small enough to matter
    let b = match (a - BigUint::from(b)).to_u64() {
        Some(rest) if rest < b => rest,
        _ => b,
    };
    let mut acc = BigUint::one();
    for j in 0..b {
        acc *= a - BigUint::from(j);
        acc /= BigUint::from(j + 1);
    }
    Count(acc)
}

/// A coefficient vector `coeffs[i]` = number of (accurate) dominating sets
/// of size `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountPolynomial {
    coeffs: Vec<Count>,
}

impl CountPolynomial {
    pub fn new(coeffs: Vec<Count>) -> Self {
        CountPolynomial { coeffs }
    }

    pub fn zeros(len: usize) -> Self {
        CountPolynomial {
            coeffs: vec![Count::zero(); len],
        }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        CountPolynomial::new(values.iter().map(|&v| Count::from(v)).collect())
    }

    pub fn coeffs(&self) -> &[Count] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Count] {
        &mut self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Count {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of all coefficients, i.e. the value at `x = 1`.
    pub fn total(&self) -> Count {
        self.coeffs.iter().sum()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let show_coeff = i == 0 || *c != Count::one();
            if show_coeff {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
