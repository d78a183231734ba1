//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical (no trailing zeros, empty vector for the zero polynomial).
//! [`interpolate`] recovers the unique least-degree polynomial through integer
//! sample points using exact Newton divided differences — never floating
//! point, so interpolated constant terms can be compared for exact equality.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A polynomial in one variable with `Rational` coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Construct from ascending-order coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = RationalPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &BigInt) -> Rational {
        let t = Rational::from_integer(t.clone());
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &t) + c;
        }
        acc
    }

    pub fn eval_i64(&self, t: i64) -> Rational {
        self.eval(&BigInt::from(t))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }
}

/// Interpolate the unique polynomial of degree below `points.len()` passing
/// exactly through all `(t, value)` samples.
///
/// Uses Newton divided differences over exact rationals. Duplicate abscissae
/// are rejected.
pub fn interpolate(points: &[(i64, Rational)]) -> Result<RationalPolynomial> {
    if points.is_empty() {
        return Err(Error::EmptyInterpolation);
    }
    for (i, (ti, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(tj, _)| tj == ti) {
            return Err(Error::DuplicateAbscissa(*ti));
        }
    }

    // dd[i] ends up holding the divided difference f[t_0, ..., t_i].
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|(_, v)| v.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dt = Rational::from_integer(points[i].0 - points[i - level].0);
            dd[i] = &(&dd[i] - &dd[i - 1]) / &dt;
        }
    }

    // Expand the Newton form into monomial coefficients.
    let mut result = RationalPolynomial::zero();
    let mut basis = RationalPolynomial::constant(Rational::one());
    for (k, coeff) in dd.iter().enumerate() {
        result = result.add(&basis.scale(coeff));
        if k + 1 < n {
            let linear = RationalPolynomial::from_coeffs(vec![
                Rational::from_integer(-points[k].0),
                Rational::one(),
            ]);
            basis = basis.mul(&linear);
        }
    }
    Ok(result)
}

impl fmt::Display for RationalPolynomial {
    /// Render in descending powers of `t`, e.g. `3t^2 + 3t + 1` or
    /// `(1/2)t^2 + (3/2)t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPolynomial({self})")
    }
}
