//! Per-class relative densities of an interval-union prime subset, swept
//! over heights where the density bottoms out near 1/alpha.
//!
//! Run: `cargo run --release -p goldbach-density --example density_profile`

use goldbach_density::experiments::{
    default_heights, run_density_profile, DensityProfileConfig, SubsetSpec,
};

fn main() -> goldbach_density::Result<()> {
    let spec = SubsetSpec::IntervalUnion {
        alpha: 3.0,
        cutoffs: vec![10_000, 300_000],
    };
    let cfg = DensityProfileConfig {
        heights: default_heights(&spec, 1_000_000),
        subset: spec,
        w_values: vec![1, 2, 3],
        sieve_cap: 100_000_000,
    };
    let doc = run_density_profile(&cfg)?;
    let r = &doc.results;

    println!(
        "{:>3} {:>3} {:>9} {:>9} {:>9} {:>8}",
        "W", "b", "height", "|A|", "|P|", "ratio"
    );
    for row in &r.rows {
        println!(
            "{:>3} {:>3} {:>9} {:>9} {:>9} {:>8.4}",
            row.w, row.b, row.height, row.subset_count, row.prime_count, row.ratio
        );
    }
    println!("\nper-class minima over the sweep:");
    for (class, min) in &r.per_class_minimum {
        println!("  {class}: {min:.4}");
    }
    println!(
        "\ninfimum (finite liminf surrogate): {:.4} (target 1/3)",
        r.infimum
    );
    Ok(())
}
