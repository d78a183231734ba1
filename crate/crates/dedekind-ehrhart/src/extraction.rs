//! Ehrhart coefficients extracted from the cotangent sum, and the exact
//! constant-term decomposition behind the reciprocity law.
//!
//! For the axis simplex with pairwise coprime intercepts `a_1..a_n` and
//! `p = a_1 * ... * a_n`, the coefficient of `t^m` in the count polynomial is
//! the coefficient of `s^-(m+1)` in
//!
//! ```text
//! pi^(m+1) / (m! 2^(n-m) p) * sum_{r=1}^{p}
//!     prod_i (1 + coth(pi (s + i r) / a_i)) * (1 + coth(pi (s + i r) / p))
//! ```
//!
//! evaluated here with truncated Laurent windows per factor. The `r` sum runs
//! in ascending order with compensated accumulation so results are
//! reproducible bit-for-bit. In dimension two the `s^-1` coefficient splits
//! exactly into three rational contributions indexed by the support of `r` —
//! multiples of `a`, multiples of `b`, and `r = ab` — which sum to the
//! constant coefficient `1`; that identity is the reciprocity law in
//! disguise, and [`constant_term_decomposition`] reproduces it in exact
//! arithmetic.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{Complex, Real};
use crate::coth::factor_series;
use crate::dedekind::{sum_via_sawtooth, CoprimePair};
use crate::error::{Error, Result};
use crate::lattice::AxisSimplex;
use crate::laurent::TruncatedLaurentSeries;
use crate::rational::{gcd, Rational};

/// Default extra retained orders per factor beyond the pole order.
const DEFAULT_FACTOR_MARGIN: i64 = 3;

/// Compensated (Kahan) accumulator for one complex coefficient slot.
#[derive(Clone, Copy, Default)]
struct Compensated {
    sum_re: Real,
    comp_re: Real,
    sum_im: Real,
    comp_im: Real,
}

impl Compensated {
    fn add(&mut self, term: Complex) {
        kahan_step(&mut self.sum_re, &mut self.comp_re, term.re);
        kahan_step(&mut self.sum_im, &mut self.comp_im, term.im);
    }

    fn value(&self) -> Complex {
        Complex::new(self.sum_re, self.sum_im)
    }
}

fn kahan_step(sum: &mut Real, comp: &mut Real, x: Real) {
    let y = x - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

/// The summed factor-product series over `r = 1..=p`, on the window common to
/// every `r` (worst pole order `n+1` against worst truncation
/// `factor_truncation - n`).
pub fn cotangent_sum_series(
    simplex: &AxisSimplex,
    factor_truncation: i64,
) -> Result<TruncatedLaurentSeries> {
    let n = simplex.dimension() as i64;
    let p = u64::try_from(simplex.intercept_product()).map_err(|_| Error::InstanceTooLarge {
        estimate: simplex.intercept_product() as f64,
        limit: u64::MAX as f64,
    })?;

    let min_order = -(n + 1);
    let truncation = factor_truncation - n;
    if truncation < min_order {
        return Err(Error::TruncationUnderflow {
            min_order,
            truncation,
        });
    }

    let mut moduli: Vec<u64> = simplex.intercepts().to_vec();
    moduli.push(p);

    let window = (truncation - min_order + 1) as usize;
    let mut acc = vec![Compensated::default(); window];
    for r in 1..=p {
        let mut product = factor_series(moduli[0], r, factor_truncation)?;
        for &c in &moduli[1..] {
            product = product.mul(&factor_series(c, r, factor_truncation)?);
        }
        for (slot, a) in acc.iter_mut().enumerate() {
            let k = min_order + slot as i64;
            a.add(
                product
                    .coeff(k)
                    .expect("common window inside every product"),
            );
        }
    }

    TruncatedLaurentSeries::new(min_order, acc.iter().map(Compensated::value).collect())
}

/// Ehrhart coefficient `c_m` of the axis simplex, extracted from the
/// cotangent sum with the given per-factor truncation order.
///
/// The imaginary part of the result is a numerical residual; it must vanish
/// up to rounding because the underlying generating function is real.
pub fn ehrhart_coefficient_with_order(
    simplex: &AxisSimplex,
    m: usize,
    factor_truncation: i64,
) -> Result<Complex> {
    let n = simplex.dimension();
    if m > n {
        return Err(Error::CoefficientOutOfRange { m, dimension: n });
    }
    let needed = -(m as i64 + 1);
    let available = factor_truncation - n as i64;
    if needed > available {
        return Err(Error::WindowTooSmall {
            needed,
            truncation: available,
        });
    }
    let series = cotangent_sum_series(simplex, factor_truncation)?;
    let raw = series.coeff(needed).expect("window checked above");
    Ok(raw * prefactor(m, n, simplex.intercept_product()))
}

/// Ehrhart coefficient `c_m` with the default truncation margin.
pub fn ehrhart_coefficient(simplex: &AxisSimplex, m: usize) -> Result<Complex> {
    let order = simplex.dimension() as i64 + DEFAULT_FACTOR_MARGIN;
    ehrhart_coefficient_with_order(simplex, m, order)
}

/// All coefficients `c_0..c_n` from a single summed series.
pub fn ehrhart_coefficients(simplex: &AxisSimplex) -> Result<Vec<Complex>> {
    let n = simplex.dimension();
    let order = n as i64 + DEFAULT_FACTOR_MARGIN;
    let series = cotangent_sum_series(simplex, order)?;
    let p = simplex.intercept_product();
    (0..=n)
        .map(|m| {
            let raw = series
                .coeff(-(m as i64 + 1))
                .expect("default window covers all coefficients");
            Ok(raw * prefactor(m, n, p))
        })
        .collect()
}

/// `pi^(m+1) / (m! 2^(n-m) p)`.
fn prefactor(m: usize, n: usize, p: u128) -> Real {
    let m_factorial: Real = (1..=m as u32).map(Real::from).product();
    PI.powi(m as i32 + 1) / (m_factorial * (2.0 as Real).powi((n - m) as i32) * p as Real)
}

/// The three exact contributions to the constant Ehrhart coefficient of the
/// two-dimensional axis simplex, split by the support of `r` in `1..=ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTermDecomposition {
    /// From `r` a multiple of `a` only: `1/4 - 1/(4b) - s(a,b)`.
    pub contrib_a: Rational,
    /// From `r` a multiple of `b` only: `1/4 - 1/(4a) - s(b,a)`.
    pub contrib_b: Rational,
    /// From `r = ab`, where all three factors are singular:
    /// `(1/(ab) + a/b + b/a)/12 + (1/b + 1/a + 1)/4`.
    pub contrib_triple: Rational,
    /// Sum of the three; equals one for every coprime pair.
    pub total: Rational,
}

/// Evaluate the three contributions exactly (Dedekind sums via the sawtooth
/// oracle) and their total.
pub fn constant_term_decomposition(pair: &CoprimePair) -> ConstantTermDecomposition {
    let a = pair.a();
    let b = pair.b();
    let quarter = Rational::new(1, 4).expect("4 != 0");

    let s_ab = sum_via_sawtooth(pair);
    let s_ba = sum_via_sawtooth(&pair.swapped());

    let contrib_a = &(&quarter - &Rational::new(1, 4 * b).expect("b > 0")) - &s_ab;
    let contrib_b = &(&quarter - &Rational::new(1, 4 * a).expect("a > 0")) - &s_ba;

    let ab = a * b;
    let twelfth_part = Rational::new(BigInt::one() + a * a + b * b, 12 * &ab).expect("ab > 0");
    let quarter_part = Rational::new(a + b + &ab, 4 * &ab).expect("ab > 0");
    let contrib_triple = &twelfth_part + &quarter_part;

    let total = &(&contrib_a + &contrib_b) + &contrib_triple;
    ConstantTermDecomposition {
        contrib_a,
        contrib_b,
        contrib_triple,
        total,
    }
}

/// Which support set a numeric contribution is summed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contribution {
    /// Multiples of `a` below `ab`: `{ka : 1 <= k <= b-1}`.
    A,
    /// Multiples of `b` below `ab`: `{kb : 1 <= k <= a-1}`.
    B,
    /// The single point `{ab}`.
    Triple,
}

/// The support set of a contribution inside `1..=ab`.
pub fn contribution_support(a: u64, b: u64, which: Contribution) -> Vec<u64> {
    match which {
        Contribution::A => (1..b).map(|k| k * a).collect(),
        Contribution::B => (1..a).map(|k| k * b).collect(),
        Contribution::Triple => vec![a * b],
    }
}

/// Re-derive one contribution numerically: sum the full factor product only
/// over the contribution's support, extract the `s^-1` coefficient, and apply
/// the n = 2 prefactor `pi/(4ab)`.
///
/// The result matches the corresponding exact field of
/// [`constant_term_decomposition`] up to floating-point residue, imaginary
/// part included (it cancels over each support set).
pub fn contribution_check(a: u64, b: u64, which: Contribution) -> Result<Complex> {
    if a == 0 {
        return Err(Error::NotPositive { name: "a" });
    }
    if b == 0 {
        return Err(Error::NotPositive { name: "b" });
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime {
            a: BigInt::from(a),
            b: BigInt::from(b),
            gcd: BigInt::from(g),
        });
    }
    let p = a.checked_mul(b).ok_or(Error::InstanceTooLarge {
        estimate: a as f64 * b as f64,
        limit: u64::MAX as f64,
    })?;

    let factor_truncation = 2 + DEFAULT_FACTOR_MARGIN;
    let mut acc = Compensated::default();
    for r in contribution_support(a, b, which) {
        let product = factor_series(a, r, factor_truncation)?
            .mul(&factor_series(b, r, factor_truncation)?)
            .mul(&factor_series(p, r, factor_truncation)?);
        acc.add(product.coeff(-1).expect("window reaches s^-1"));
    }
    Ok(acc.value() * (PI / (4.0 * p as Real)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn simplex(intercepts: &[u64]) -> AxisSimplex {
        AxisSimplex::new(intercepts.to_vec()).unwrap()
    }

    fn pair(a: u64, b: u64) -> CoprimePair {
        CoprimePair::from_u64(a, b).unwrap()
    }

    #[test]
    fn coefficients_for_2_3() {
        let s = simplex(&[2, 3]);
        for (m, expected) in [(0usize, 1.0), (1, 3.0), (2, 3.0)] {
            let c = ehrhart_coefficient(&s, m).unwrap();
            assert!(
                (c.re - expected).abs() <= 1e-9,
                "c_{m}: got {c}, expected {expected}"
            );
            assert!(c.im.abs() <= 1e-9, "c_{m} imaginary residual {}", c.im);
        }
    }

    #[test]
    fn coefficients_match_interpolation_for_dimension_one() {
        let s = simplex(&[5]);
        let c0 = ehrhart_coefficient(&s, 0).unwrap();
        let c1 = ehrhart_coefficient(&s, 1).unwrap();
        assert!((c0.re - 1.0).abs() <= 1e-9);
        assert!((c1.re - 5.0).abs() <= 1e-9);
    }

    #[test]
    fn coefficients_for_dimension_three() {
        // (1,2,3) dilates like the unit cube: counts (t+1)^3.
        let s = simplex(&[1, 2, 3]);
        let all = ehrhart_coefficients(&s).unwrap();
        let expected = [1.0, 3.0, 3.0, 1.0];
        for (m, (c, e)) in all.iter().zip(expected).enumerate() {
            assert!((c.re - e).abs() <= 1e-9, "c_{m}: {c} vs {e}");
            assert!(c.im.abs() <= 1e-9);
        }
    }

    #[test]
    fn out_of_range_and_window_errors() {
        let s = simplex(&[2, 3]);
        assert!(matches!(
            ehrhart_coefficient(&s, 3),
            Err(Error::CoefficientOutOfRange { m: 3, dimension: 2 })
        ));
        // Truncation so small the pole coefficient is cut off.
        assert!(matches!(
            ehrhart_coefficient_with_order(&s, 2, -2),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn decomposition_for_2_3() {
        let d = constant_term_decomposition(&pair(2, 3));
        assert_eq!(d.contrib_a, rat(2, 9));
        assert_eq!(d.contrib_b, rat(1, 8));
        assert_eq!(d.contrib_triple, rat(47, 72));
        assert_eq!(d.total, Rational::one());
    }

    #[test]
    fn decomposition_for_1_1() {
        let d = constant_term_decomposition(&pair(1, 1));
        assert_eq!(d.contrib_a, Rational::zero());
        assert_eq!(d.contrib_b, Rational::zero());
        assert_eq!(d.contrib_triple, Rational::one());
        assert_eq!(d.total, Rational::one());
    }

    #[test]
    fn decomposition_totals_one() {
        for a in 1u64..=40 {
            for b in 1..=40 {
                if gcd(a, b) == 1 {
                    let d = constant_term_decomposition(&pair(a, b));
                    assert_eq!(d.total, Rational::one(), "total != 1 at ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn numeric_contributions_match_exact() {
        for &(a, b) in &[(2u64, 3u64), (1, 1), (3, 5), (4, 9), (7, 10)] {
            let exact = constant_term_decomposition(&pair(a, b));
            for (which, expected) in [
                (Contribution::A, &exact.contrib_a),
                (Contribution::B, &exact.contrib_b),
                (Contribution::Triple, &exact.contrib_triple),
            ] {
                let numeric = contribution_check(a, b, which).unwrap();
                assert!(
                    (numeric.re - expected.to_f64()).abs() <= 1e-8,
                    "({a},{b}) {which:?}: {numeric} vs {expected}"
                );
                assert!(numeric.im.abs() <= 1e-8);
            }
        }
    }

    #[test]
    fn empty_support_gives_zero() {
        let z = contribution_check(1, 1, Contribution::A).unwrap();
        assert_eq!(z, Complex::new(0.0, 0.0));
        assert!(contribution_support(1, 1, Contribution::A).is_empty());
    }

    #[test]
    fn two_singular_factor_supports_are_empty() {
        // Any r in 1..=ab divisible by two of the moduli {a, b, ab} is
        // divisible by all of them, so the mixed support sets are empty sets.
        for a in 1u64..=12 {
            for b in 1..=12 {
                if gcd(a, b) != 1 {
                    continue;
                }
                let ab = a * b;
                let ss: Vec<u64> = (1..=ab)
                    .filter(|r| r % a == 0 && r % b == 0 && r % ab != 0)
                    .collect();
                assert!(ss.is_empty(), "({a},{b}): support {ss:?}");
                let sa: Vec<u64> = (1..=ab)
                    .filter(|r| r % a == 0 && r % ab == 0 && r % b != 0)
                    .collect();
                assert!(sa.is_empty());
                let sb: Vec<u64> = (1..=ab)
                    .filter(|r| r % b == 0 && r % ab == 0 && r % a != 0)
                    .collect();
                assert!(sb.is_empty());
            }
        }
    }

    #[test]
    fn contribution_check_validates_input() {
        assert!(contribution_check(4, 6, Contribution::A).is_err());
        assert!(contribution_check(0, 1, Contribution::A).is_err());
    }
}
