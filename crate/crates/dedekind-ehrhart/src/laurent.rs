//! Truncated Laurent series over complex coefficients.
//!
//! A series stores the coefficients of `s^k` for `k` in a finite window
//! `[min_order, truncation]`. Powers below the window are exactly zero;
//! powers above it are unknown (truncated away). Binary operations propagate
//! the window of validity: a sum is valid up to the smaller truncation, and a
//! product of windows `[m1, K1]` and `[m2, K2]` is valid on
//! `[m1 + m2, min(m1 + K2, m2 + K1)]`, since higher terms would need
//! coefficients beyond one factor's truncation. For valid (nonempty) inputs
//! the result window is never empty, so the operations themselves are total;
//! the constructors reject empty windows.

use std::fmt;

use crate::complex::{Complex, Real};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedLaurentSeries {
    min_order: i64,
    coeffs: Vec<Complex>,
}

impl TruncatedLaurentSeries {
    /// Series with the given lowest order; `coeffs[i]` is the coefficient of
    /// `s^(min_order + i)`. The window must be nonempty.
    pub fn new(min_order: i64, coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::TruncationUnderflow {
                min_order,
                truncation: min_order - 1,
            });
        }
        Ok(TruncatedLaurentSeries { min_order, coeffs })
    }

    /// All-zero series on the window `[min_order, truncation]`.
    pub fn zero(min_order: i64, truncation: i64) -> Result<Self> {
        if truncation < min_order {
            return Err(Error::TruncationUnderflow {
                min_order,
                truncation,
            });
        }
        let len = (truncation - min_order + 1) as usize;
        Ok(TruncatedLaurentSeries {
            min_order,
            coeffs: vec![Complex::new(0.0, 0.0); len],
        })
    }

    /// `value * s^order` on the window `[order, truncation]`.
    pub fn monomial(order: i64, value: Complex, truncation: i64) -> Result<Self> {
        let mut s = Self::zero(order, truncation)?;
        s.coeffs[0] = value;
        Ok(s)
    }

    pub fn constant(value: Complex, truncation: i64) -> Result<Self> {
        Self::monomial(0, value, truncation)
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    /// Highest retained power.
    pub fn truncation(&self) -> i64 {
        self.min_order + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `s^k`: exact zero below the window, `None` above the
    /// truncation where nothing is known.
    pub fn coeff(&self, k: i64) -> Option<Complex> {
        if k > self.truncation() {
            return None;
        }
        if k < self.min_order {
            return Some(Complex::new(0.0, 0.0));
        }
        Some(self.coeffs[(k - self.min_order) as usize])
    }

    fn coeff_in_window(&self, k: i64) -> Complex {
        self.coeff(k).expect("k within the validity window")
    }

    /// Coefficient-wise sum on the common window of validity.
    pub fn add(&self, other: &Self) -> Self {
        let min_order = self.min_order.min(other.min_order);
        let truncation = self.truncation().min(other.truncation());
        debug_assert!(min_order <= truncation);
        let coeffs = (min_order..=truncation)
            .map(|k| self.coeff_in_window(k) + other.coeff_in_window(k))
            .collect();
        TruncatedLaurentSeries { min_order, coeffs }
    }

    /// Cauchy product, truncated to the window both factors can support.
    pub fn mul(&self, other: &Self) -> Self {
        let min_order = self.min_order + other.min_order;
        let truncation =
            (self.min_order + other.truncation()).min(other.min_order + self.truncation());
        debug_assert!(min_order <= truncation);
        let mut coeffs = vec![Complex::new(0.0, 0.0); (truncation - min_order + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            let ka = self.min_order + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = ka + other.min_order + j as i64;
                if k > truncation {
                    break;
                }
                coeffs[(k - min_order) as usize] += a * b;
            }
        }
        TruncatedLaurentSeries { min_order, coeffs }
    }

    pub fn scale(&self, factor: Complex) -> Self {
        TruncatedLaurentSeries {
            min_order: self.min_order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: Real) -> Self {
        self.scale(Complex::new(factor, 0.0))
    }

    /// Evaluate the retained terms at a concrete point.
    pub fn eval(&self, s: Complex) -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.min_order + i as i64;
            acc += c * s.powi(k as i32);
        }
        acc
    }
}

impl fmt::Display for TruncatedLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.min_order + i as i64;
            if c.norm_sqr() == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6e}{:+.6e}i)", c.re, c.im)?;
            match k {
                0 => {}
                1 => write!(f, "*s")?,
                _ => write!(f, "*s^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.truncation() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn series(min_order: i64, coeffs: &[f64]) -> TruncatedLaurentSeries {
        TruncatedLaurentSeries::new(min_order, coeffs.iter().map(|&x| re(x)).collect()).unwrap()
    }

    #[test]
    fn empty_window_rejected() {
        assert!(matches!(
            TruncatedLaurentSeries::new(0, vec![]),
            Err(Error::TruncationUnderflow { .. })
        ));
        assert!(matches!(
            TruncatedLaurentSeries::zero(2, 1),
            Err(Error::TruncationUnderflow { .. })
        ));
    }

    #[test]
    fn monomial_product_adds_powers() {
        // s^-1 * s = 1 on the window the factors support.
        let inv = TruncatedLaurentSeries::monomial(-1, re(1.0), 3).unwrap();
        let lin = TruncatedLaurentSeries::monomial(1, re(1.0), 3).unwrap();
        let prod = inv.mul(&lin);
        assert_eq!(prod.min_order(), 0);
        assert_eq!(prod.truncation(), 2);
        assert_eq!(prod.coeff(0), Some(re(1.0)));
        assert_eq!(prod.coeff(1), Some(re(0.0)));
        assert_eq!(prod.coeff(3), None);
    }

    #[test]
    fn additive_identity() {
        let x = series(-1, &[2.0, 1.0, 0.5]);
        let zero = TruncatedLaurentSeries::zero(-1, 1).unwrap();
        assert_eq!(x.add(&zero), x);
    }

    #[test]
    fn binomial_square() {
        // (s^-1 + 1)^2 = s^-2 + 2 s^-1 + 1.
        let x = series(-1, &[1.0, 1.0, 0.0, 0.0]);
        let sq = x.mul(&x);
        assert_eq!(sq.min_order(), -2);
        assert_eq!(sq.coeff(-2), Some(re(1.0)));
        assert_eq!(sq.coeff(-1), Some(re(2.0)));
        assert_eq!(sq.coeff(0), Some(re(1.0)));
    }

    #[test]
    fn window_rule_for_products() {
        // [m1,K1] x [m2,K2] -> [m1+m2, min(m1+K2, m2+K1)]
        let a = series(-1, &[1.0, 2.0, 3.0, 4.0]); // window [-1, 2]
        let b = series(0, &[1.0, 1.0]); // window [0, 1]
        let p = a.mul(&b);
        assert_eq!(p.min_order(), -1);
        assert_eq!(p.truncation(), 0);
        // (s^-1 + 2 + 3s + 4s^2)(1 + s): coefficient of s^0 is 2 + 1.
        assert_eq!(p.coeff(0), Some(re(3.0)));
        assert_eq!(p.coeff(-1), Some(re(1.0)));
    }

    #[test]
    fn sum_window_is_common_validity() {
        let a = series(-2, &[5.0, 0.0, 1.0, 0.0, 0.0, 7.0]); // [-2, 3]
        let b = series(0, &[1.0, 1.0]); // [0, 1]
        let sum = a.add(&b);
        assert_eq!(sum.min_order(), -2);
        assert_eq!(sum.truncation(), 1);
        assert_eq!(sum.coeff(-2), Some(re(5.0)));
        assert_eq!(sum.coeff(0), Some(re(2.0)));
        assert_eq!(sum.coeff(2), None);
    }

    #[test]
    fn eval_sums_retained_terms() {
        let x = series(-1, &[2.0, 1.0, 3.0]); // 2/s + 1 + 3s
        let s = Complex::new(0.5, 0.0);
        let v = x.eval(s);
        assert!((v.re - (4.0 + 1.0 + 1.5)).abs() < 1e-12);
    }

    proptest::proptest! {
        // The product window follows the rule for arbitrary windows, and
        // every retained coefficient equals the brute-force convolution.
        #[test]
        fn product_window_rule_holds(
            m1 in -4i64..4,
            m2 in -4i64..4,
            c1 in proptest::collection::vec(-3.0f64..3.0, 1..6),
            c2 in proptest::collection::vec(-3.0f64..3.0, 1..6),
        ) {
            let a = series(m1, &c1);
            let b = series(m2, &c2);
            let p = a.mul(&b);
            proptest::prop_assert_eq!(p.min_order(), m1 + m2);
            proptest::prop_assert_eq!(
                p.truncation(),
                (m1 + b.truncation()).min(m2 + a.truncation())
            );
            for k in p.min_order()..=p.truncation() {
                let mut expect = 0.0;
                for (i, x) in c1.iter().enumerate() {
                    let j = k - (m1 + i as i64) - m2;
                    if j >= 0 && (j as usize) < c2.len() {
                        expect += x * c2[j as usize];
                    }
                }
                let got = p.coeff(k).unwrap().re;
                proptest::prop_assert!((got - expect).abs() <= 1e-12 * (1.0 + expect.abs()));
            }

            let sum = a.add(&b);
            proptest::prop_assert_eq!(sum.min_order(), m1.min(m2));
            proptest::prop_assert_eq!(sum.truncation(), a.truncation().min(b.truncation()));
        }
    }
}
