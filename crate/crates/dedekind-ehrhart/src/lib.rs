//! Exact Dedekind sums, Ehrhart polynomials of lattice simplices and
//! polygons, and Ehrhart coefficients extracted from truncated cotangent
//! Laurent series.
//!
//! The crate ties three computations together and cross-checks them:
//!
//! - [`dedekind`]: the Dedekind sum `s(a,b)` by three independent routes —
//!   the exact sawtooth sum, the floating-point cotangent sum, and a
//!   Euclidean-time reciprocity recursion that handles hundred-digit
//!   arguments — plus an exact check of the reciprocity identity
//!   `s(a,b) + s(b,a) = -1/4 + (a/b + 1/(ab) + b/a)/12`.
//! - [`lattice`]: brute-force lattice-point counts of dilated axis simplices
//!   and convex lattice polygons, Ehrhart polynomials recovered by exact
//!   interpolation, and Pick's theorem `A t^2 + (B/2) t + 1`.
//! - [`extraction`]: the same Ehrhart coefficients extracted as Laurent
//!   coefficients of a finite cotangent sum, and the exact three-part
//!   decomposition of the constant coefficient that yields the reciprocity
//!   identity.
//!
//! Everything exact runs over arbitrary-precision rationals ([`rational`],
//! [`poly`]); the floating-point series engine lives in [`laurent`] and
//! [`coth`] over [`complex::Complex`] coefficients.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share or send across threads.
//!
//! # Quick example
//!
//! ```
//! use dedekind_ehrhart::{AxisSimplex, CoprimePair};
//! use dedekind_ehrhart::dedekind::{reciprocity_check, sum_fast};
//! use dedekind_ehrhart::extraction::ehrhart_coefficient;
//!
//! let pair = CoprimePair::from_u64(2, 3)?;
//! assert_eq!(sum_fast(&pair).to_string(), "-1/18");
//! assert!(reciprocity_check(&pair).holds);
//!
//! let simplex = AxisSimplex::new(vec![2, 3])?;
//! assert_eq!(simplex.ehrhart_polynomial()?.to_string(), "3t^2 + 3t + 1");
//!
//! // The area coefficient, recovered from the cotangent sum numerically.
//! let c2 = ehrhart_coefficient(&simplex, 2)?;
//! assert!((c2.re - 3.0).abs() < 1e-9);
//! # Ok::<(), dedekind_ehrhart::Error>(())
//! ```

pub mod complex;
pub mod coth;
pub mod dedekind;
pub mod error;
pub mod extraction;
pub mod lattice;
pub mod laurent;
pub mod poly;
pub mod rational;

pub use complex::{Complex, Real};
pub use dedekind::{CoprimePair, ReciprocityReport};
pub use error::{Error, Result};
pub use extraction::ConstantTermDecomposition;
pub use lattice::{AxisSimplex, EhrhartPolynomial, LatticePolygon};
pub use laurent::TruncatedLaurentSeries;
pub use poly::RationalPolynomial;
pub use rational::{gcd, Rational};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<Rational>();
        check::<RationalPolynomial>();
        check::<CoprimePair>();
        check::<ReciprocityReport>();
        check::<AxisSimplex>();
        check::<EhrhartPolynomial>();
        check::<LatticePolygon>();
        check::<TruncatedLaurentSeries>();
        check::<ConstantTermDecomposition>();
        check::<Error>();
    }
}
