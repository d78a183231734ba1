//! Verify the reciprocity identity exactly over a sweep of coprime pairs:
//! s(a,b) + s(b,a) = -1/4 + (a/b + 1/(ab) + b/a)/12.
//!
//! ```bash
//! cargo run --release --example reciprocity_sweep
//! ```

use dedekind_ehrhart::dedekind::reciprocity_check;
use dedekind_ehrhart::{gcd, CoprimePair};

fn main() -> Result<(), dedekind_ehrhart::Error> {
    println!("sample pairs:");
    println!(
        "{:>5} {:>5} {:>12} {:>12} {:>14} {:>14}",
        "a", "b", "s(a,b)", "s(b,a)", "lhs", "rhs"
    );
    for (a, b) in [(1u64, 1u64), (2, 3), (2, 5), (5, 7), (12, 35), (99, 100)] {
        let report = reciprocity_check(&CoprimePair::from_u64(a, b)?);
        assert!(report.holds);
        println!(
            "{a:>5} {b:>5} {:>12} {:>12} {:>14} {:>14}",
            report.s_ab.to_string(),
            report.s_ba.to_string(),
            report.lhs.to_string(),
            report.rhs.to_string(),
        );
    }

    let bound = 200u64;
    let mut pairs = 0u64;
    for a in 1..=bound {
        for b in 1..=bound {
            if gcd(a, b) == 1 {
                let report = reciprocity_check(&CoprimePair::from_u64(a, b)?);
                assert!(report.holds, "reciprocity failed at ({a},{b})");
                pairs += 1;
            }
        }
    }
    println!();
    println!(
        "exhaustive sweep: identity holds exactly for all {pairs} coprime pairs up to {bound}"
    );
    Ok(())
}
