//! Coefficient rings for [`Polynomial`](crate::polynomial::Polynomial).
//!
//! Every algorithm in this crate only needs exact ring operations over the
//! integers, so anything that behaves like `Z` qualifies: `i64` and `i128`
//! for speed when the numbers are known to stay small, `BigInt` otherwise.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

pub trait Coefficient:
    Signed + FromPrimitive + Clone + Eq + Ord + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Signed + FromPrimitive + Clone + Eq + Ord + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}

/// Lift a machine count into the coefficient ring.
pub fn from_count<C: Coefficient>(n: usize) -> C {
    C::from_usize(n).expect("count does not fit in coefficient type")
}
