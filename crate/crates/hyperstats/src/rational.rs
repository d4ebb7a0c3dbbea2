//! Exact rational values.
//!
//! Every expectation in this crate is accumulated as an arbitrary-precision
//! rational and only rendered to `f64` at the presentation boundary.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact rational number, always kept in reduced form with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactValue(BigRational);

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactValue(BigRational::from_integer(BigInt::from(1)))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        ExactValue(BigRational::from_integer(v.into()))
    }

    /// `num / den`. Panics if `den` is zero.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExactValue(BigRational::new(num.into(), den.into()))
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        ExactValue(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        ExactValue(self.0.pow(exp as i32))
    }

    /// Nearest-representable double rendering of the exact value.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl From<BigInt> for ExactValue {
    fn from(v: BigInt) -> Self {
        ExactValue(BigRational::from_integer(v))
    }
}

impl From<u64> for ExactValue {
    fn from(v: u64) -> Self {
        ExactValue::from_integer(v)
    }
}

impl From<i64> for ExactValue {
    fn from(v: i64) -> Self {
        ExactValue::from_integer(v)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: ExactValue) -> ExactValue {
                ExactValue((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactValue> for ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: &'a ExactValue) -> ExactValue {
                ExactValue((self.0).$method(&rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b ExactValue> for &'a ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: &'b ExactValue) -> ExactValue {
                ExactValue((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        ExactValue(-self.0)
    }
}

impl AddAssign<ExactValue> for ExactValue {
    fn add_assign(&mut self, rhs: ExactValue) {
        self.0 += rhs.0;
    }
}

impl Sum for ExactValue {
    fn sum<I: Iterator<Item = ExactValue>>(iter: I) -> ExactValue {
        iter.fold(ExactValue::zero(), |acc, v| acc + v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form() {
        let v = ExactValue::ratio(4, 6);
        assert_eq!(v.numer(), &BigInt::from(2));
        assert_eq!(v.denom(), &BigInt::from(3));
        assert_eq!(v.to_string(), "2/3");
    }

    #[test]
    fn negative_denominator_normalized() {
        let v = ExactValue::ratio(1, -2);
        assert!(v.is_negative());
        assert_eq!(v.denom(), &BigInt::from(2));
    }

    #[test]
    fn float_rendering() {
        assert_eq!(ExactValue::ratio(1, 3).to_f64(), 1.0 / 3.0);
        assert_eq!(ExactValue::from_integer(7).to_f64(), 7.0);
    }
}
