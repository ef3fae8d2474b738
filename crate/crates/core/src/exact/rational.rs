use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An exact rational, always in lowest terms with positive denominator.
///
/// Thin wrapper over [`BigRational`], which maintains exactly those
/// invariants; the wrapper pins the JSON form `{"num": "...", "den": "..."}`
/// with decimal strings (values like B_120 overflow every native type).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Option<Self> {
        if denominator.is_zero() {
            return None;
        }
        Some(ExactRational(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator, always positive.
    pub fn denominator(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn abs(&self) -> ExactRational {
        ExactRational(self.0.abs())
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        debug_assert!(r.denom().sign() != Sign::Minus);
        ExactRational(r)
    }
}

impl std::ops::Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 + &rhs.0)
    }
}

impl std::ops::Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 * &rhs.0)
    }
}

impl std::ops::Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl std::ops::Div for &ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero rational");
        ExactRational(&self.0 / &rhs.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExactRational", 2)?;
        s.serialize_field("num", &self.numerator().to_string())?;
        s.serialize_field("den", &self.denominator().to_string())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = ExactRational::new(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(r.numerator(), &BigInt::from(-3));
        assert_eq!(r.denominator(), BigUint::from(2u32));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let r = ExactRational::new(BigInt::from(0), BigInt::from(7)).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.denominator(), BigUint::from(1u32));
    }

    #[test]
    fn json_shape() {
        let r = ExactRational::new(BigInt::from(-691), BigInt::from(2730)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"num":"-691","den":"2730"}"#
        );
    }
}
