//! Exact computer-algebra kernel: coefficient domains (rationals, prime
//! fields, extension fields), sparse multivariate and dense univariate
//! polynomials, subresultant-based elimination, finite-field factorization,
//! and zero-dimensional bivariate system solving.
//!
//! Everything is exact and deterministic: randomized choices (shears,
//! splitting elements, modulus searches) always draw from a caller-supplied
//! seeded RNG.

pub mod domain;
pub mod factor;
pub mod irreducibility;
pub mod linalg;
pub mod multipoly;
pub mod resultant;
pub mod solve;
pub mod unipoly;

pub use domain::{
    is_prime_u64, sample_prime, ExtensionField, Field, FiniteField, PrimeField, Rationals, Ring,
};
pub use multipoly::{Monomial, MultiPoly};
pub use unipoly::UniPoly;

/// Polynomials over the rationals.
pub type RationalPoly = MultiPoly<Rationals>;
/// Polynomials over a prime field `GF(p)`.
pub type PrimePoly = MultiPoly<PrimeField>;
/// Polynomials over an extension field `GF(p^k)`.
pub type TowerPoly = MultiPoly<ExtensionField>;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different domains: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    #[error("{0} is not an odd prime below 2^62")]
    NotAnOddPrime(u64),
    #[error("extension modulus must be monic of degree >= 1 with reduced coefficients")]
    BadModulus,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("polynomial is not univariate in the requested variable")]
    NotUnivariate,
    #[error("zero polynomial passed where a nonzero one is required")]
    ZeroInput,
    #[error("leading coefficient vanishes")]
    ZeroLeadingCoefficient,
    #[error("denominator vanishes modulo {0}")]
    BadReduction(u64),
    #[error("system has a positive-dimensional solution set")]
    PositiveDimensionalIntersection,
    #[error("retry budget exhausted: {0}")]
    RetryBudgetExhausted(String),
}
