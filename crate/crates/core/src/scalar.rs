//! Scalar traits that the exact algorithms are generic over.
//!
//! Everything in this crate is exact: integer matrices run over any
//! [`IntScalar`] (machine integers or `BigInt`), cyclotomic elements carry
//! coefficients in any [`Scalar`] ring, and inversion needs a [`FieldScalar`]
//! such as `Ratio<i64>` or `BigRational`. Floating point types are
//! deliberately not wired in: every zero test must be exact.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring with exact equality.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every exact scalar embeds the integers")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// A Euclidean integer type (`i64`, `i128`, `BigInt`).
pub trait IntScalar: Scalar + Integer + Signed {}

impl<T> IntScalar for T where T: Scalar + Integer + Signed {}

/// A scalar type in which every nonzero element is invertible.
pub trait FieldScalar: Scalar {}

impl<T> FieldScalar for Ratio<T>
where
    T: IntScalar,
    Ratio<T>: Scalar,
{
}
