//! Crate-wide error type.

use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into input validation (`NotCoprime`, `NotPositive`, ...),
/// resource guards (`InstanceTooLarge`), misuse of the series machinery
/// (`WrongBranch`, `TruncationUnderflow`, `WindowTooSmall`), and internal
/// consistency violations that always indicate a bug (`InternalInvariant`).
#[derive(Debug, Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("interpolation needs at least one point")]
    EmptyInterpolation,
    #[error("duplicate interpolation abscissa t = {0}")]
    DuplicateAbscissa(i64),
    #[error("{name} must be positive")]
    NotPositive { name: &'static str },
    #[error("inputs must be coprime: gcd({a},{b}) = {gcd}")]
    NotCoprime { a: BigInt, b: BigInt, gcd: BigInt },
    #[error("intercepts must be pairwise coprime: gcd({a},{b}) = {gcd}")]
    NotPairwiseCoprime { a: u64, b: u64, gcd: u64 },
    #[error("instance too large: estimated {estimate:.3e} enumeration steps exceed the limit {limit:.3e}")]
    InstanceTooLarge { estimate: f64, limit: f64 },
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
    #[error("empty series window: min order {min_order} exceeds truncation {truncation}")]
    TruncationUnderflow { min_order: i64, truncation: i64 },
    #[error("modulus {modulus} divides r = {r}: the factor is singular, not regular")]
    WrongBranch { modulus: u64, r: u64 },
    #[error("truncation window reaches only s^{truncation} but s^{needed} is needed")]
    WindowTooSmall { needed: i64, truncation: i64 },
    #[error("coefficient index {m} out of range for dimension {dimension}")]
    CoefficientOutOfRange { m: usize, dimension: usize },
    #[error("internal consistency violation: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
