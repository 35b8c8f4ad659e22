//! Set-valued skyline fillings, Lascoux atoms and the K-theoretic
//! polynomials built from them.
//!
//! Everything is exact. Polynomials are generic over an integer
//! [`Coefficient`] type; [`BPolynomial`] fixes it to arbitrary precision.

pub mod bijections;
pub mod composition;
pub mod error;
pub mod expansion;
pub mod fillings;
pub mod genfun;
pub mod genomic;
pub mod operators;
pub mod permutation;
pub mod polynomial;
pub mod scalar;
pub mod tableaux;

use num_bigint::BigInt;

pub use composition::{Partition, WeakComposition};
pub use error::{Error, Result};
pub use fillings::{Basement, EntrySet, SetFilling};
pub use genomic::{GenomicFilling, Label};
pub use permutation::Permutation;
pub use polynomial::{BMonomial, Polynomial};
pub use scalar::Coefficient;
pub use tableaux::{Convention, LenartPair, SetTableau};

/// Polynomials with arbitrary-precision integer coefficients.
pub type BPolynomial = Polynomial<BigInt>;
/// Polynomials with machine-integer coefficients, for speed on small inputs.
pub type SmallPolynomial = Polynomial<i64>;
pub type BAtomExpansion = expansion::AtomExpansion<BigInt>;
pub type BBasisCache = expansion::BasisCache<BigInt>;
