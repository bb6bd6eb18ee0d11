//! The exact integer scalar every computation in this crate is generic over.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type: `i64`, `i128` or [`num_bigint::BigInt`].
///
/// Fixed-width instantiations do no overflow checking; callers pick a width
/// that fits their inputs or use `BigInt`.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("every Int holds an i64")
    }

    fn two() -> Self {
        Self::from_small(2)
    }
}

impl<T> Int for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}

pub(crate) fn gcd3<T: Int>(a: &T, b: &T, c: &T) -> T {
    a.gcd(b).gcd(c)
}

/// Parses a base-10 integer into any [`Int`].
pub fn parse_int<T: Int>(s: &str) -> Option<T> {
    T::from_str_radix(s.trim(), 10).ok()
}
