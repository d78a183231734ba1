//! Lattice-point counting in dilated axis-intercept simplices and convex
//! lattice polygons, and Ehrhart polynomials recovered from exact counts.
//!
//! Counting is brute-force by design: the counts are the independent oracle
//! against which everything else in the crate is verified, so the enumeration
//! uses nothing but integer comparisons (denominators are cleared through the
//! intercept product). A resource guard refuses instances whose enumeration
//! volume exceeds a configurable ceiling.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{interpolate, RationalPolynomial};
use crate::rational::{gcd, Rational};

/// Default ceiling on the estimated enumeration volume `t^n * p / n!`.
pub const DEFAULT_ENUM_LIMIT: f64 = 1e8;

/// The simplex with vertices at the origin and `a_i * e_i`, for pairwise
/// coprime positive intercepts `a_1..a_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisSimplex {
    intercepts: Vec<u64>,
    product: u128,
}

impl AxisSimplex {
    pub fn new(intercepts: Vec<u64>) -> Result<Self> {
        if intercepts.is_empty() {
            return Err(Error::NotPositive { name: "dimension" });
        }
        if intercepts.contains(&0) {
            return Err(Error::NotPositive { name: "intercept" });
        }
        for i in 0..intercepts.len() {
            for j in i + 1..intercepts.len() {
                let g = gcd(intercepts[i], intercepts[j]);
                if g != 1 {
                    return Err(Error::NotPairwiseCoprime {
                        a: intercepts[i],
                        b: intercepts[j],
                        gcd: g,
                    });
                }
            }
        }
        let mut product: u128 = 1;
        let mut rough: f64 = 1.0;
        for &a in &intercepts {
            rough *= a as f64;
            product = product
                .checked_mul(a as u128)
                .ok_or(Error::InstanceTooLarge {
                    estimate: rough,
                    limit: u128::MAX as f64,
                })?;
        }
        Ok(AxisSimplex {
            intercepts,
            product,
        })
    }

    pub fn dimension(&self) -> usize {
        self.intercepts.len()
    }

    pub fn intercepts(&self) -> &[u64] {
        &self.intercepts
    }

    /// The intercept product `p = a_1 * ... * a_n`.
    pub fn intercept_product(&self) -> u128 {
        self.product
    }

    /// Exact number of lattice points in the closed dilate `t * P`.
    ///
    /// A point `x >= 0` lies in `t * P` iff `sum x_i / a_i <= t`, i.e.
    /// `sum (p / a_i) x_i <= p t` in integers.
    pub fn lattice_points(&self, t: u64) -> Result<u64> {
        self.lattice_points_with_limit(t, DEFAULT_ENUM_LIMIT)
    }

    pub fn lattice_points_with_limit(&self, t: u64, limit: f64) -> Result<u64> {
        let estimate = self.enumeration_estimate(t);
        if estimate > limit {
            return Err(Error::InstanceTooLarge { estimate, limit });
        }
        let budget = self
            .product
            .checked_mul(t as u128)
            .ok_or(Error::InstanceTooLarge {
                estimate: self.product as f64 * t as f64,
                limit: u128::MAX as f64,
            })?;
        let weights: Vec<u128> = self
            .intercepts
            .iter()
            .map(|&a| self.product / a as u128)
            .collect();
        Ok(count_weighted(&weights, budget))
    }

    /// `t^n * p / n!`, the volume-scale estimate used by the resource guard.
    fn enumeration_estimate(&self, t: u64) -> f64 {
        let n = self.dimension();
        let mut est = self.product as f64;
        for k in 1..=n {
            est *= t as f64 / k as f64;
        }
        est
    }

    /// Recover the Ehrhart polynomial by interpolating counts at `t = 0..=n`.
    pub fn ehrhart_polynomial(&self) -> Result<EhrhartPolynomial> {
        self.ehrhart_polynomial_with_limit(DEFAULT_ENUM_LIMIT)
    }

    pub fn ehrhart_polynomial_with_limit(&self, limit: f64) -> Result<EhrhartPolynomial> {
        let n = self.dimension();
        let mut samples = Vec::with_capacity(n + 1);
        for t in 0..=n as u64 {
            let count = self.lattice_points_with_limit(t, limit)?;
            samples.push((t as i64, Rational::from_integer(count)));
        }
        let poly = interpolate(&samples)?;
        let result = EhrhartPolynomial::new(poly, n)?;

        // Leading coefficient must be the volume p / n!.
        let volume =
            Rational::new(BigInt::from(self.product), factorial(n)).expect("n! is positive");
        if result.coefficient(n) != volume {
            return Err(Error::InternalInvariant(format!(
                "leading Ehrhart coefficient {} differs from volume {}",
                result.coefficient(n),
                volume
            )));
        }
        Ok(result)
    }
}

/// Count `x >= 0` (componentwise) with `sum w_i x_i <= budget`.
fn count_weighted(weights: &[u128], budget: u128) -> u64 {
    match weights {
        [] => 1,
        [w] => (budget / w + 1) as u64,
        [w, rest @ ..] => {
            let mut total = 0;
            let mut spent = 0;
            while spent <= budget {
                total += count_weighted(rest, budget - spent);
                spent += w;
            }
            total
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// A degree-`n` lattice-count polynomial with exact rational coefficients.
///
/// The constant coefficient is always one (the count of the undilated point),
/// which the constructor enforces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    poly: RationalPolynomial,
    dimension: usize,
}

impl EhrhartPolynomial {
    pub fn new(poly: RationalPolynomial, dimension: usize) -> Result<Self> {
        if poly.coeff(0) != Rational::one() {
            return Err(Error::InternalInvariant(format!(
                "constant Ehrhart coefficient is {}, expected 1",
                poly.coeff(0)
            )));
        }
        if poly.degree() != Some(dimension) {
            return Err(Error::InternalInvariant(format!(
                "Ehrhart polynomial has degree {:?}, expected {}",
                poly.degree(),
                dimension
            )));
        }
        Ok(EhrhartPolynomial { poly, dimension })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Coefficient of `t^m`.
    pub fn coefficient(&self, m: usize) -> Rational {
        self.poly.coeff(m)
    }

    pub fn as_polynomial(&self) -> &RationalPolynomial {
        &self.poly
    }

    pub fn eval(&self, t: u64) -> Rational {
        self.poly.eval(&BigInt::from(t))
    }
}

impl std::fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.poly.fmt(f)
    }
}

/// A strictly convex lattice polygon, vertices in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<(i64, i64)>,
}

impl LatticePolygon {
    /// Validate and wrap a vertex list.
    ///
    /// Requirements: at least three vertices, every consecutive turn strictly
    /// left (which excludes repeated and collinear vertices), and the edge
    /// directions complete exactly one counterclockwise revolution (which
    /// excludes star-polygon traversals). All checks are exact integer
    /// arithmetic.
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon("fewer than three vertices"));
        }
        let n = vertices.len();
        let edge = |i: usize| {
            let (x0, y0) = vertices[i];
            let (x1, y1) = vertices[(i + 1) % n];
            (x1 - x0, y1 - y0)
        };
        for i in 0..n {
            let (ex0, ey0) = edge(i);
            let (ex1, ey1) = edge((i + 1) % n);
            let cross = ex0 as i128 * ey1 as i128 - ey0 as i128 * ex1 as i128;
            if cross == 0 {
                return Err(Error::InvalidPolygon(
                    "three consecutive vertices are collinear",
                ));
            }
            if cross < 0 {
                return Err(Error::InvalidPolygon(
                    "vertices are not in counterclockwise convex position",
                ));
            }
        }
        // With all turns strictly left, the edge directions have strictly
        // increasing angle; the polygon is simple iff they wrap around once.
        let mut wraps = 0;
        for i in 0..n {
            if angular_less(edge((i + 1) % n), edge(i)) {
                wraps += 1;
            }
        }
        if wraps != 1 {
            return Err(Error::InvalidPolygon(
                "edge directions wind around more than once",
            ));
        }
        Ok(LatticePolygon { vertices })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    /// Exact area by the shoelace formula.
    pub fn area(&self) -> Rational {
        Rational::new(self.shoelace_double_area(), 2).expect("2 != 0")
    }

    fn shoelace_double_area(&self) -> i128 {
        let n = self.vertices.len();
        let mut sum: i128 = 0;
        for i in 0..n {
            let (x0, y0) = self.vertices[i];
            let (x1, y1) = self.vertices[(i + 1) % n];
            sum += x0 as i128 * y1 as i128 - x1 as i128 * y0 as i128;
        }
        sum
    }

    /// Number of lattice points on the boundary: the gcd count over edges.
    pub fn boundary_points(&self) -> u64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (x0, y0) = self.vertices[i];
                let (x1, y1) = self.vertices[(i + 1) % n];
                gcd((x1 - x0).unsigned_abs(), (y1 - y0).unsigned_abs())
            })
            .sum()
    }

    /// The count polynomial `A t^2 + (B/2) t + 1` with `A` the area and `B`
    /// the boundary lattice point count.
    pub fn pick_polynomial(&self) -> EhrhartPolynomial {
        let a = self.area();
        let half_b = Rational::new(self.boundary_points(), 2).expect("2 != 0");
        let poly = RationalPolynomial::from_coeffs(vec![Rational::one(), half_b, a]);
        EhrhartPolynomial::new(poly, 2).expect("validated polygon has positive area")
    }

    /// Exact number of lattice points in the closed dilate `t * P`, by a
    /// bounding-box scan with an inclusive point-in-convex-polygon test.
    pub fn lattice_points(&self, t: u64) -> Result<u64> {
        self.lattice_points_with_limit(t, DEFAULT_ENUM_LIMIT)
    }

    pub fn lattice_points_with_limit(&self, t: u64, limit: f64) -> Result<u64> {
        if t == 0 {
            // The dilate collapses to the single point at the origin of the
            // scaled coordinates.
            return Ok(1);
        }
        let t = t as i128;
        let scaled: Vec<(i128, i128)> = self
            .vertices
            .iter()
            .map(|&(x, y)| (x as i128 * t, y as i128 * t))
            .collect();
        let min_x = scaled.iter().map(|&(x, _)| x).min().unwrap();
        let max_x = scaled.iter().map(|&(x, _)| x).max().unwrap();
        let min_y = scaled.iter().map(|&(_, y)| y).min().unwrap();
        let max_y = scaled.iter().map(|&(_, y)| y).max().unwrap();

        // Box dimensions in f64: the spans can exceed i128 for extreme
        // vertex coordinates, the guard estimate only needs magnitude.
        let estimate = (max_x as f64 - min_x as f64 + 1.0) * (max_y as f64 - min_y as f64 + 1.0);
        if estimate > limit {
            return Err(Error::InstanceTooLarge { estimate, limit });
        }

        let n = scaled.len();
        let mut count = 0;
        for qx in min_x..=max_x {
            for qy in min_y..=max_y {
                let inside = (0..n).all(|i| {
                    let (x0, y0) = scaled[i];
                    let (x1, y1) = scaled[(i + 1) % n];
                    (x1 - x0) * (qy - y0) - (y1 - y0) * (qx - x0) >= 0
                });
                if inside {
                    count += 1;
                }
            }
        }
        Ok(count)
    }
}

/// Exact "angle of u precedes angle of v" for nonzero integer vectors, in the
/// fixed order that starts at the positive x-axis and sweeps counterclockwise.
fn angular_less(u: (i64, i64), v: (i64, i64)) -> bool {
    let (hu, hv) = (half_plane(u), half_plane(v));
    if hu != hv {
        return hu < hv;
    }
    u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128 > 0
}

fn half_plane(v: (i64, i64)) -> u8 {
    let (x, y) = v;
    debug_assert!(x != 0 || y != 0);
    if y > 0 || (y == 0 && x > 0) {
        0
    } else {
        1
    }
}
