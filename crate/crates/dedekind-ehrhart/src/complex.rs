//! Complex floating-point scalars for the Laurent-series engine.
//!
//! The whole floating-point path works over [`Real`]; switching the alias to
//! an extended-precision type is the single change needed for a
//! higher-precision build.

/// Scalar precision of the floating-point engine.
pub type Real = f64;

/// Complex value over [`Real`].
pub type Complex = num_complex::Complex<Real>;

/// cot(pi * m / c) for 0 < m < c, computed after folding the argument into
/// (0, pi/2] so that arguments near pi never lose precision.
pub(crate) fn cot_pi_ratio(m: u64, c: u64) -> Real {
    debug_assert!(0 < m && m < c);
    let (m, sign) = if 2 * m > c { (c - m, -1.0) } else { (m, 1.0) };
    if 2 * m == c {
        return 0.0;
    }
    let theta = std::f64::consts::PI * (m as Real) / (c as Real);
    sign * theta.tan().recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cot_symmetry_and_special_values() {
        assert_eq!(cot_pi_ratio(1, 2), 0.0);
        assert_eq!(cot_pi_ratio(2, 4), 0.0);
        assert!((cot_pi_ratio(1, 4) - 1.0).abs() < 1e-15);
        assert!((cot_pi_ratio(3, 4) + 1.0).abs() < 1e-15);
        // Odd around pi/2: cot(pi (c-m)/c) = -cot(pi m/c).
        for c in 2..40u64 {
            for m in 1..c {
                let lhs = cot_pi_ratio(c - m, c);
                let rhs = -cot_pi_ratio(m, c);
                assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
            }
        }
    }
}
