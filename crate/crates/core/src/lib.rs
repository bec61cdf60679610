//! Exact computations with orbifold fundamental groups of curves:
//! presentations, abelianizations, Fox calculus and depth at torsion
//! characters, permutation covers, and Betti numbers of abelian covers.

pub mod abelian;
pub mod alexander;
pub mod covers;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod fpgroup;
pub mod io;
pub mod sakuma;
pub mod scalar;

pub use error::{Error, Result};

/// Integer matrices with arbitrary precision entries.
pub type IntMatrix = abelian::Matrix<num_bigint::BigInt>;
/// Smith normal form over the integers.
pub type IntSmith = abelian::Smith<num_bigint::BigInt>;
/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Elements of the cyclotomic field `ℚ(ζ_N)`.
pub type CycloField = cyclotomic::Cyclo<Rational>;
/// Cyclotomic integers `ℤ[ζ_N]`.
pub type CycloInt = cyclotomic::Cyclo<num_bigint::BigInt>;
