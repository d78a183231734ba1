//! Recover Ehrhart polynomials of axis simplices from brute-force lattice
//! counts, then use them to predict counts at dilations that were never
//! enumerated during interpolation.
//!
//! ```bash
//! cargo run --release --example ehrhart_polynomials
//! ```

use dedekind_ehrhart::{AxisSimplex, Rational};

fn main() -> Result<(), dedekind_ehrhart::Error> {
    for intercepts in [
        vec![2u64, 3],
        vec![1, 1],
        vec![5, 7],
        vec![1, 2, 3],
        vec![2, 3, 5],
    ] {
        let simplex = AxisSimplex::new(intercepts.clone())?;
        let n = simplex.dimension();
        let poly = simplex.ehrhart_polynomial()?;
        println!("intercepts {intercepts:?}:  L(t) = {poly}");
        println!(
            "  volume term c_{n} = {}, constant term c_0 = {}",
            poly.coefficient(n),
            poly.coefficient(0)
        );

        let counts: Vec<u64> = (0..=n as u64 + 3)
            .map(|t| simplex.lattice_points(t).unwrap())
            .collect();
        println!("  brute-force counts  t = 0..={}: {counts:?}", n + 3);
        let predicted: Vec<Rational> = (0..=n as u64 + 3).map(|t| poly.eval(t)).collect();
        for (t, (c, p)) in counts.iter().zip(&predicted).enumerate() {
            assert_eq!(Rational::from_integer(*c), *p, "mismatch at t={t}");
        }
        println!("  polynomial reproduces every count, including t > {n} (not interpolated)");
        println!();
    }
    Ok(())
}
