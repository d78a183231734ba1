//! Pick's theorem as a count polynomial: for a convex lattice polygon with
//! area A and B boundary lattice points, the t-fold dilate contains
//! A t^2 + (B/2) t + 1 lattice points. Checked against brute-force counts.
//!
//! ```bash
//! cargo run --release --example picks_theorem
//! ```

use dedekind_ehrhart::{LatticePolygon, Rational};

fn main() -> Result<(), dedekind_ehrhart::Error> {
    let shapes: Vec<(&str, Vec<(i64, i64)>)> = vec![
        ("unit square", vec![(0, 0), (1, 0), (1, 1), (0, 1)]),
        ("right triangle 2x3", vec![(0, 0), (2, 0), (0, 3)]),
        ("unit right triangle", vec![(0, 0), (1, 0), (0, 1)]),
        (
            "hexagon",
            vec![(2, 0), (4, 1), (5, 3), (3, 5), (1, 4), (0, 2)],
        ),
        ("off-origin quad", vec![(7, 3), (10, 4), (11, 7), (6, 6)]),
    ];

    for (name, vertices) in shapes {
        let polygon = LatticePolygon::new(vertices)?;
        let pick = polygon.pick_polynomial();
        println!(
            "{name}: area {}, boundary points {}",
            polygon.area(),
            polygon.boundary_points()
        );
        println!("  L(t) = {pick}");
        for t in 0..=3u64 {
            let counted = polygon.lattice_points(t)?;
            let predicted = pick.eval(t);
            assert_eq!(Rational::from_integer(counted), predicted);
            println!("  t = {t}: counted {counted:>4}, polynomial {predicted}");
        }
        println!();
    }
    Ok(())
}
