//! Exact rationals and big-integer binomials for ratio claims.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Canonical rational: reduced, positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    /// `count / 2^n`.
    pub fn over_power_of_two(count: impl Into<BigInt>, n: usize) -> Self {
        Self::new(count, BigInt::one() << n)
    }

    pub fn half() -> Self {
        Self::new(1, 2)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Display-only approximation.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Add for ExactRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for ExactRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for ExactRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

/// `C(n, k)` via the multiplicative formula; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1u128; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let rows = pascal(120);
        for (n, row) in rows.iter().enumerate() {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), BigUint::from(c), "C({n},{k})");
            }
            assert!(binomial(n as u64, n as u64 + 1).is_zero());
        }
    }

    #[test]
    fn canonical_form() {
        let r = ExactRational::new(240, 256);
        assert_eq!(r.to_string(), "15/16");
        assert_eq!(ExactRational::new(3, -6).to_string(), "-1/2");
        assert_eq!(ExactRational::from_integer(1).to_string(), "1/1");
        assert_eq!(ExactRational::over_power_of_two(36, 8), ExactRational::new(9, 64));
        assert!(ExactRational::new(1, 3) < ExactRational::half());
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"15/16\"");
    }
}
