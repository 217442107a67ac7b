//! Exact numeric values: arbitrary-precision counts and rationals.
//!
//! Every norm value and size bound in this crate is either a [`BigCount`]
//! or an [`ExactRatio`]; floating point is confined to the Stirling
//! factorial bounds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn from_u64(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// Subtraction, failing instead of wrapping when `rhs > self`.
    pub fn checked_sub(&self, rhs: &BigCount) -> Result<BigCount> {
        if rhs.0 > self.0 {
            return Err(Error::Underflow(format!("{} - {}", self.0, rhs.0)));
        }
        Ok(BigCount(&self.0 - &rhs.0))
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn pow(&self, exp: u32) -> BigCount {
        BigCount(self.0.pow(exp))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount::from_u64(v)
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl Add<&BigCount> for &BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl Mul<&BigCount> for &BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact rational, always in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(BigRational);

impl ExactRatio {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        // BigRational::new reduces and normalises the sign of the denominator.
        Ok(ExactRatio(BigRational::new(numer, denom)))
    }

    pub fn from_int(v: i64) -> Self {
        ExactRatio(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_counts(numer: &BigCount, denom: &BigCount) -> Result<Self> {
        ExactRatio::new(
            BigInt::from(numer.as_biguint().clone()),
            BigInt::from(denom.as_biguint().clone()),
        )
    }

    pub fn from_count(v: &BigCount) -> Self {
        ExactRatio(BigRational::from_integer(BigInt::from(
            v.as_biguint().clone(),
        )))
    }

    pub fn zero() -> Self {
        ExactRatio(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRatio(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn add(&self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 + &rhs.0)
    }

    pub fn sub(&self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 - &rhs.0)
    }

    pub fn mul(&self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 * &rhs.0)
    }

    pub fn div(&self, rhs: &ExactRatio) -> Result<ExactRatio> {
        if rhs.0.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        Ok(ExactRatio(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<ExactRatio> {
        ExactRatio::one().div(self)
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Renders as `p/q`, or just `p` when the value is an integer.
    pub fn render(&self) -> String {
        if self.0.is_integer() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_checked_sub_underflows() {
        let a = BigCount::from_u64(3);
        let b = BigCount::from_u64(5);
        assert!(a.checked_sub(&b).is_err());
        assert_eq!(b.checked_sub(&a).unwrap(), BigCount::from_u64(2));
    }

    #[test]
    fn ratio_is_reduced() {
        let r = ExactRatio::new(BigInt::from(4), BigInt::from(6)).unwrap();
        assert_eq!(r.render(), "2/3");
        let neg = ExactRatio::new(BigInt::from(2), BigInt::from(-4)).unwrap();
        assert_eq!(neg.render(), "-1/2");
        assert!(neg.denom() > &BigInt::from(0));
    }

    #[test]
    fn ratio_integer_renders_plain() {
        let r = ExactRatio::new(BigInt::from(8), BigInt::from(4)).unwrap();
        assert_eq!(r.render(), "2");
    }
}
