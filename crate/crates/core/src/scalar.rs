//! Coefficient fields.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A characteristic-zero field with exact equality.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync + 'static {
    fn from_int(v: i64) -> Self;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Send + Sync + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar"))
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
}

/// Scalars with an exact numerator/denominator form, used by the complex format.
pub trait ExactScalar: Scalar {
    fn to_fraction(&self) -> (BigInt, BigInt);
    fn from_fraction(numer: BigInt, denom: BigInt) -> Option<Self>;
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Send + Sync + 'static,
    T: Into<BigInt> + TryFrom<BigInt>,
{
    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone().into(), self.denom().clone().into())
    }

    fn from_fraction(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom == BigInt::from(0) {
            return None;
        }
        let n = T::try_from(numer).ok()?;
        let d = T::try_from(denom).ok()?;
        Some(Ratio::new(n, d))
    }
}
