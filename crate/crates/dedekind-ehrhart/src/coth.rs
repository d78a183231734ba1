//! Laurent windows of the factors `1 + coth(pi (s + i r) / c)`.
//!
//! The expansion at `s = 0` depends on whether `c` divides `r`:
//!
//! * `c | r`: `coth` has period `pi*i`, so the factor reduces to
//!   `1 + coth(pi s / c)` and carries a simple pole. Its window starts at
//!   `s^-1` with coefficient `c/pi`, followed by the classical odd-order
//!   cotangent-series tail driven by the even Bernoulli numbers.
//! * `c !| r`: the factor is analytic at `s = 0`. The constant term is
//!   `1 + coth(pi i r / c) = 1 - i cot(pi r / c)` and the higher Taylor
//!   coefficients follow from the differential equation `y' = 1 - y^2`
//!   satisfied by `coth`, rescaled by `(pi/c)^k` per order.

use std::f64::consts::PI;

use num_bigint::BigInt;

use crate::complex::{cot_pi_ratio, Complex, Real};
use crate::error::{Error, Result};
use crate::laurent::TruncatedLaurentSeries;
use crate::rational::Rational;

/// Which expansion branch a factor takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `c | r`: simple pole at `s = 0`.
    Singular,
    /// `c` does not divide `r`: analytic at `s = 0`.
    Regular,
}

impl FactorKind {
    pub fn classify(modulus: u64, r: u64) -> FactorKind {
        debug_assert!(modulus >= 1);
        if r.is_multiple_of(modulus) {
            FactorKind::Singular
        } else {
            FactorKind::Regular
        }
    }
}

/// Bernoulli numbers `B_0..B_n` by the standard recurrence, exact.
pub(crate) fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        // B_m = -(1/(m+1)) * sum_{j<m} C(m+1, j) B_j
        let mut sum = Rational::zero();
        let mut binom = BigInt::from(1u32); // C(m+1, 0)
        for (j, bj) in b.iter().enumerate() {
            sum = &sum + &(&Rational::from_integer(binom.clone()) * bj);
            // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
            binom = binom * (m + 1 - j) / (j + 1);
        }
        let next = &(-&sum) / &Rational::from_integer(m as i64 + 1);
        b.push(next);
    }
    b
}

/// Taylor coefficient of `x^(2j-1)` in `coth(x) - 1/x`, i.e.
/// `4^j B_{2j} / (2j)!`, as an exact rational.
fn coth_tail_coefficient(bern: &[Rational], j: usize) -> Rational {
    let four_pow = BigInt::from(4u32).pow(j as u32);
    let fact: BigInt = (1..=2 * j as u64).map(BigInt::from).product();
    &(&bern[2 * j] * &Rational::from_integer(four_pow)) / &Rational::from_integer(fact)
}

/// Window `[-1, truncation]` of `1 + coth(pi s / c)`.
///
/// Requires `truncation >= -1`. The retained coefficients are `c/pi` at
/// `s^-1`, `1` at `s^0`, `pi/(3c)` at `s^1`, zero at every even order above
/// zero, and the Bernoulli tail at odd orders.
pub fn singular_series(modulus: u64, truncation: i64) -> Result<TruncatedLaurentSeries> {
    debug_assert!(modulus >= 1);
    if truncation < -1 {
        return Err(Error::TruncationUnderflow {
            min_order: -1,
            truncation,
        });
    }
    let c = modulus as Real;
    let mut coeffs: Vec<Complex> = vec![Complex::new(0.0, 0.0); (truncation + 2) as usize];
    coeffs[0] = Complex::new(c / PI, 0.0);
    if truncation >= 0 {
        coeffs[1] = Complex::new(1.0, 0.0);
    }
    if truncation >= 1 {
        let max_j = ((truncation + 1) / 2) as usize;
        let bern = bernoulli(2 * max_j);
        for j in 1..=max_j {
            let k = 2 * j as i64 - 1;
            if k > truncation {
                break;
            }
            let exact = coth_tail_coefficient(&bern, j);
            let value = exact.to_f64() * (PI / c).powi(k as i32);
            coeffs[(k + 1) as usize] = Complex::new(value, 0.0);
        }
    }
    TruncatedLaurentSeries::new(-1, coeffs)
}

/// Window `[0, truncation]` of `1 + coth(pi (s + i r) / c)` for `c !| r`.
///
/// Seeds `y_0 = coth(pi i r / c) = -i cot(pi r / c)` with the argument folded
/// into (0, pi), then extends by `(k+1) y_{k+1} = [k = 0] - sum_j y_j y_{k-j}`
/// in the unscaled variable before rescaling order `k` by `(pi/c)^k`.
pub fn regular_series(modulus: u64, r: u64, truncation: i64) -> Result<TruncatedLaurentSeries> {
    debug_assert!(modulus >= 1);
    if r.is_multiple_of(modulus) {
        return Err(Error::WrongBranch { modulus, r });
    }
    if truncation < 0 {
        return Err(Error::TruncationUnderflow {
            min_order: 0,
            truncation,
        });
    }
    let c = modulus as Real;
    let y0 = Complex::new(0.0, -cot_pi_ratio(r % modulus, modulus));

    let k_max = truncation as usize;
    let mut y: Vec<Complex> = Vec::with_capacity(k_max + 1);
    y.push(y0);
    for k in 0..k_max {
        let mut conv = Complex::new(0.0, 0.0);
        for j in 0..=k {
            conv += y[j] * y[k - j];
        }
        let delta = if k == 0 {
            Complex::new(1.0, 0.0)
        } else {
            Complex::new(0.0, 0.0)
        };
        y.push((delta - conv) / (k as Real + 1.0));
    }

    let mut coeffs: Vec<Complex> = Vec::with_capacity(k_max + 1);
    for (k, yk) in y.iter().enumerate() {
        coeffs.push(yk * (PI / c).powi(k as i32));
    }
    coeffs[0] += Complex::new(1.0, 0.0);
    TruncatedLaurentSeries::new(0, coeffs)
}

/// Window of `1 + coth(pi (s + i r) / c)`, dispatching on divisibility.
pub fn factor_series(modulus: u64, r: u64, truncation: i64) -> Result<TruncatedLaurentSeries> {
    match FactorKind::classify(modulus, r) {
        FactorKind::Singular => singular_series(modulus, truncation),
        FactorKind::Regular => regular_series(modulus, r, truncation),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(8);
        assert_eq!(b[0], Rational::one());
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], Rational::zero());
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn coth_tail_coefficients() {
        let b = bernoulli(8);
        assert_eq!(coth_tail_coefficient(&b, 1), rat(1, 3));
        assert_eq!(coth_tail_coefficient(&b, 2), rat(-1, 45));
        assert_eq!(coth_tail_coefficient(&b, 3), rat(2, 945));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(FactorKind::classify(2, 4), FactorKind::Singular);
        assert_eq!(FactorKind::classify(3, 4), FactorKind::Regular);
        assert_eq!(FactorKind::classify(6, 6), FactorKind::Singular);
    }

    #[test]
    fn singular_window_values() {
        // c = 1: (1/pi) s^-1 + 1 + (pi/3) s + 0 s^2 - (pi^3/45) s^3 ...
        let s = singular_series(1, 3).unwrap();
        assert!((s.coeff(-1).unwrap().re - 1.0 / PI).abs() < 1e-15);
        assert!((s.coeff(0).unwrap().re - 1.0).abs() < 1e-15);
        assert!((s.coeff(1).unwrap().re - PI / 3.0).abs() < 1e-15);
        assert_eq!(s.coeff(2).unwrap().re, 0.0);
        assert!((s.coeff(3).unwrap().re + PI.powi(3) / 45.0).abs() < 1e-15);

        // c = 2: (2/pi) s^-1 + 1 + (pi/6) s + ...
        let s2 = singular_series(2, 1).unwrap();
        assert!((s2.coeff(-1).unwrap().re - 2.0 / PI).abs() < 1e-15);
        assert!((s2.coeff(0).unwrap().re - 1.0).abs() < 1e-15);
        assert!((s2.coeff(1).unwrap().re - PI / 6.0).abs() < 1e-15);

        // Even orders above zero vanish for any modulus.
        for c in 1..=6 {
            let s = singular_series(c, 6).unwrap();
            assert_eq!(s.coeff(2).unwrap().re, 0.0);
            assert_eq!(s.coeff(4).unwrap().re, 0.0);
            assert_eq!(s.coeff(6).unwrap().re, 0.0);
        }

        // Periodicity makes the singular factor independent of r; the
        // dispatcher must route any multiple of c to the same window.
        let via_dispatch = factor_series(6, 6, 4).unwrap();
        assert_eq!(via_dispatch, singular_series(6, 4).unwrap());
    }

    #[test]
    fn regular_constant_terms() {
        // c=2, r=1: cot(pi/2) = 0, so the constant term is exactly 1.
        let s = regular_series(2, 1, 3).unwrap();
        assert_eq!(s.coeff(0).unwrap(), Complex::new(1.0, 0.0));

        // c=4, r=1: 1 - i cot(pi/4) = 1 - i.
        let s = regular_series(4, 1, 2).unwrap();
        let v = s.coeff(0).unwrap();
        assert!((v.re - 1.0).abs() < 1e-15);
        assert!((v.im + 1.0).abs() < 1e-15);
    }

    #[test]
    fn regular_series_is_shifted_tanh_for_half_period() {
        // coth(i pi/2 + h) = tanh(h) = h - h^3/3 + ..., so with h = pi s / 2:
        // 1 + (pi/2) s + 0 s^2 - (1/3)(pi/2)^3 s^3 + ...
        let s = regular_series(2, 1, 4).unwrap();
        assert!((s.coeff(1).unwrap().re - PI / 2.0).abs() < 1e-15);
        assert_eq!(s.coeff(2).unwrap().norm_sqr(), 0.0);
        assert!((s.coeff(3).unwrap().re + (PI / 2.0).powi(3) / 3.0).abs() < 1e-15);
        assert_eq!(s.coeff(4).unwrap().norm_sqr(), 0.0);
    }

    #[test]
    fn wrong_branch_is_rejected() {
        assert!(matches!(
            regular_series(3, 6, 2),
            Err(Error::WrongBranch { modulus: 3, r: 6 })
        ));
    }

    #[test]
    fn windows_track_truncation_argument() {
        let s = singular_series(5, -1).unwrap();
        assert_eq!(s.truncation(), -1);
        assert!(singular_series(5, -2).is_err());
        assert!(regular_series(5, 2, -1).is_err());
    }

    /// Direct complex evaluation of the factor against the truncated window,
    /// at sample points on a small circle around the expansion point. Each
    /// sample exercises a singular and a regular factor.
    #[test]
    fn series_match_direct_evaluation() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let radius = 1e-2;
        let truncation = 5i64;
        for _ in 0..20 {
            let angle: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let s0 = Complex::new(radius * angle.cos(), radius * angle.sin());
            let c = rng.random_range(2..=9u64);
            let r_singular = c * rng.random_range(1..=4u64);
            let r_regular = r_singular + rng.random_range(1..c);
            for r in [r_singular, r_regular] {
                let series = factor_series(c, r, truncation).unwrap();
                let z = (s0 + Complex::new(0.0, r as f64)) * (PI / c as f64);
                let direct = Complex::new(1.0, 0.0) + z.tanh().finv();

                let retained = (truncation - series.min_order() + 1) as i32;
                let tol = radius.powi(retained) * 1e3;
                let approx = series.eval(s0);
                let rel = (direct - approx).norm() / direct.norm().max(1.0);
                assert!(
                    rel <= tol,
                    "factor (c={c}, r={r}) at {s0}: direct {direct} vs series {approx} (rel {rel:.3e}, tol {tol:.3e})"
                );
            }
        }
    }
}
