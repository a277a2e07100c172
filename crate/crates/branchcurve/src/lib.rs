//! Branch curves of generic central projections of surfaces in P^3.
//!
//! The pipeline: take a surface with exact integer coefficients, reduce
//! modulo large seeded primes, project from a random center, compute the
//! branch curve as a discriminant, locate and classify its singular points
//! (nodes/cusps), and compare everything against the closed-form counts.
//! A separate focal toolkit handles two-parameter line families and their
//! focal loci.

pub mod focal;
pub mod invariants;
pub mod parse;
pub mod pipeline;
pub mod projection;
pub mod report;
pub mod singclass;
pub mod surface;
pub mod variety;

use branchcurve_algebra::AlgebraError;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum GeometryError {
    #[error("algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("polynomial is not homogeneous")]
    NonHomogeneousInput,
    #[error("inconsistent invariants: {0}")]
    InconsistentInvariants(String),
    #[error("sectional genus would be negative")]
    NegativeGenus,
    #[error("projection center lies on the surface")]
    CenterOnSurface,
    #[error("branch locus is not reduced and cannot be normalized: {0}")]
    NonReducedBranch(String),
    #[error("line is contained in the surface")]
    LineInSurface,
    #[error("line family degenerates at the requested parameter")]
    DegenerateLine,
    #[error("focal form vanishes identically: family is not filling")]
    NotFilling,
    #[error("retry budget exhausted: {0}")]
    RetryBudgetExhausted(String),
    #[error("bad prime {0} for this surface")]
    BadPrime(u64),
    #[error("input error: {0}")]
    Input(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
