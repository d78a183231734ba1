//! Split the constant Ehrhart coefficient of the (a, b) axis triangle into
//! its three exact contributions. Their sum is always exactly 1, which is
//! the reciprocity identity for Dedekind sums in disguise: the first two
//! contributions are 1/4 - 1/(4b) - s(a,b) and 1/4 - 1/(4a) - s(b,a).
//!
//! Each contribution is also re-derived numerically by summing the cotangent
//! factor product over just that contribution's support.
//!
//! ```bash
//! cargo run --release --example constant_term
//! ```

use dedekind_ehrhart::extraction::{
    constant_term_decomposition, contribution_check, contribution_support, Contribution,
};
use dedekind_ehrhart::CoprimePair;

fn main() -> Result<(), dedekind_ehrhart::Error> {
    println!(
        "{:>4} {:>4} {:>12} {:>12} {:>14} {:>7}",
        "a", "b", "contrib_a", "contrib_b", "contrib_triple", "total"
    );
    for (a, b) in [(1u64, 1u64), (2, 3), (3, 5), (4, 9), (7, 10), (11, 13)] {
        let d = constant_term_decomposition(&CoprimePair::from_u64(a, b)?);
        println!(
            "{a:>4} {b:>4} {:>12} {:>12} {:>14} {:>7}",
            d.contrib_a.to_string(),
            d.contrib_b.to_string(),
            d.contrib_triple.to_string(),
            d.total.to_string(),
        );
        assert!(d.total.is_one());
    }

    let (a, b) = (2u64, 3u64);
    let exact = constant_term_decomposition(&CoprimePair::from_u64(a, b)?);
    println!();
    println!("numeric re-derivation for ({a},{b}), summing only over each support:");
    for (which, reference) in [
        (Contribution::A, &exact.contrib_a),
        (Contribution::B, &exact.contrib_b),
        (Contribution::Triple, &exact.contrib_triple),
    ] {
        let support = contribution_support(a, b, which);
        let numeric = contribution_check(a, b, which)?;
        println!(
            "  {which:?}: support {support:?} -> {:.12} (exact {reference}, diff {:.2e})",
            numeric.re,
            (numeric.re - reference.to_f64()).abs(),
        );
    }
    Ok(())
}
