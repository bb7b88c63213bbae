//! A prime subset of relative density 3/4 whose pair sums miss every even
//! integer congruent to 16 mod 30: the residue construction at m = 15,
//! scanned exactly to 10^6.
//!
//! Run: `cargo run --release -p goldbach-density --example counterexample_scan`

use goldbach_density::experiments::{run_counterexample, CounterexampleConfig};

fn main() -> goldbach_density::Result<()> {
    let cfg = CounterexampleConfig {
        m: 15,
        limit: 1_000_000,
        density_tolerance: 0.05,
        evens_tolerance: 0.01,
        sieve_cap: 100_000_000,
    };
    let (doc, passed) = run_counterexample(&cfg)?;
    let r = &doc.results;

    println!("local classes mod {}: {:?}", r.m, r.local_classes);
    println!(
        "subset density: measured {:.4} vs closed form {:.4}",
        r.measured_global_density, r.local_density_closed_form
    );
    println!("\nper-class subset density mod {}:", r.m);
    for (b, d) in &r.per_class_density {
        println!("  b = {b:>2}: {d:.4}");
    }
    println!(
        "\nexceptional evens up to {}: {} ({:.4} of all evens, floor {:.4})",
        r.limit, r.exceptional_count, r.density_among_evens, r.evens_density_floor
    );
    println!(
        "missed class {} mod {}: {} of {} evens exceptional (complete: {})",
        r.missed_class,
        r.m,
        r.missed_class_exceptional,
        r.missed_class_total,
        r.checks.missed_class_fully_exceptional
    );
    println!(
        "exceptional evens outside the missed class: {}",
        r.other_exceptional.count
    );
    println!("\nall checks passed: {passed}");
    Ok(())
}
