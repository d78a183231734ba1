//! Compute Dedekind sums by all three routes and compare them, including a
//! pair of 200-digit arguments that only the Euclidean-time route can handle.
//!
//! ```bash
//! cargo run --release --example dedekind_sums
//! ```

use std::time::Instant;

use num_bigint::BigInt;

use dedekind_ehrhart::dedekind::{sum_fast, sum_via_cotangent, sum_via_sawtooth};
use dedekind_ehrhart::CoprimePair;

fn main() -> Result<(), dedekind_ehrhart::Error> {
    println!(
        "{:>8} {:>8} {:>12} {:>12} {:>16}",
        "a", "b", "sawtooth", "fast", "cotangent"
    );
    for (a, b) in [
        (1u64, 1u64),
        (2, 3),
        (1, 3),
        (2, 5),
        (5, 7),
        (100, 147),
        (355, 113),
    ] {
        let pair = CoprimePair::from_u64(a, b)?;
        let exact = sum_via_sawtooth(&pair);
        let fast = sum_fast(&pair);
        let approx = sum_via_cotangent(&pair);
        assert_eq!(exact, fast);
        println!(
            "{a:>8} {b:>8} {:>12} {:>12} {approx:>16.10}",
            exact.to_string(),
            fast.to_string()
        );
    }

    // Two coprime 200-digit integers: the O(b) sums are hopeless here, the
    // reciprocity recursion is instant.
    let a: BigInt = format!("4{}", "371".repeat(66)).parse().unwrap();
    let mut b: BigInt = format!("9{}", "218".repeat(66)).parse().unwrap();
    while num_integer::Integer::gcd(&a, &b) != BigInt::from(1u8) {
        b += 1;
    }
    let pair = CoprimePair::new(a, b)?;
    let start = Instant::now();
    let value = sum_fast(&pair);
    let elapsed = start.elapsed();
    println!();
    println!("200-digit pair:");
    println!("  a = {}", pair.a());
    println!("  b = {}", pair.b());
    println!(
        "  s(a,b) has a {}-digit numerator over a {}-digit denominator ({elapsed:.2?})",
        value.numer().to_string().trim_start_matches('-').len(),
        value.denom().to_string().len(),
    );
    Ok(())
}
