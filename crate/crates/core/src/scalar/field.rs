use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{RatFunc, ScalarError};

/// Exact coefficient field for every computation in the crate.
///
/// Two implementations exist: [`RatFunc`] (symbolic `q`) and
/// [`BigRational`] (the same computations after substituting a rational
/// value for `q`). There is deliberately no floating-point implementation.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    fn try_inv(&self) -> Result<Self, ScalarError>;

    fn from_i64(n: i64) -> Self;

    fn from_bigint(n: &BigInt) -> Self;

    /// Heuristic size of the element; elimination prefers small pivots.
    fn cost(&self) -> usize;

    fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.clone() * &other.try_inv()?)
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    fn powi(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * &sq;
            }
        }
        Ok(acc)
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Result<Self, ScalarError> {
        RatFunc::try_inv(self)
    }

    fn from_i64(n: i64) -> Self {
        RatFunc::from_int(n)
    }

    fn from_bigint(n: &BigInt) -> Self {
        RatFunc::from_int(n.clone())
    }

    fn cost(&self) -> usize {
        RatFunc::cost(self)
    }
}

impl Field for BigRational {
    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn cost(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_negative() {
        let q = RatFunc::q();
        assert_eq!(q.powi(-3).unwrap(), RatFunc::q_pow(-3));
        let h = BigRational::new(1.into(), 2.into());
        assert_eq!(h.powi(-2).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::try_inv(&RatFunc::zero()).is_err());
        assert!(Field::try_inv(&BigRational::zero()).is_err());
    }
}
