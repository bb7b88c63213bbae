//! Exhaustively verifies the local sumset theorem over Z_15: every pair of
//! unit subsets with |A| + |B| above the rational threshold covers Z_15,
//! and pairs exactly at the threshold can fail (sharpness).
//!
//! Run: `cargo run --release -p goldbach-density --example local_theorem`

use goldbach_density::{goldbach_threshold, verify_local_theorem, SquarefreeModulus, VerifyMode};

fn main() -> goldbach_density::Result<()> {
    let modulus = SquarefreeModulus::new(15)?;
    let threshold = goldbach_threshold(&modulus);
    println!("m = 15, phi = {}, threshold = {}", modulus.phi(), threshold);
    println!("checking all 2^8 x 2^8 unit subset pairs ...");

    let report = verify_local_theorem(&modulus, VerifyMode::Exhaustive, true)?;
    println!(
        "pairs checked (above + at threshold): {}",
        report.pairs_checked
    );
    println!(
        "violations above the threshold:       {}",
        report.violations.len()
    );
    println!(
        "proper sumsets at the threshold:      {}",
        report.sharp_witnesses.len()
    );

    if let Some(w) = report.sharp_witnesses.first() {
        println!("\nfirst sharpness witness:");
        println!("  A = {:?}  (|A| = {})", w.a, w.a.len());
        println!("  B = {:?}  (|B| = {})", w.b, w.b.len());
    }

    // the same theorem, sampled at a modulus far too large to enumerate
    let big = SquarefreeModulus::new(105)?;
    println!(
        "\nm = 105, phi = {}, threshold = {}",
        big.phi(),
        goldbach_threshold(&big)
    );
    let sampled = verify_local_theorem(
        &big,
        VerifyMode::Sampled {
            count: 20_000,
            seed: 42,
        },
        false,
    )?;
    println!(
        "sampled {} pairs above the threshold: {} violations",
        sampled.pairs_checked,
        sampled.violations.len()
    );

    assert!(report.violations.is_empty() && sampled.violations.is_empty());
    println!("\nlocal theorem holds on everything checked");
    Ok(())
}
