//! Exact integer scalars.
//!
//! Everything that touches integer homology (matrices, pairings, cyclotomic
//! polynomials, determinants) is generic over [`Scalar`]. The crate root fixes
//! the arbitrary-precision instance as the default; machine integers work too
//! as long as the caller knows entries stay in range.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed Euclidean ring element (`i64`, `i128`, `BigInt`, ...).
pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Signed + Integer + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Reduction modulo 2, as a bit.
    fn is_odd_bit(&self) -> bool {
        self.is_odd()
    }

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent an i64 value")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Hash
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
