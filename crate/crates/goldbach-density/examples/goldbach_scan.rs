//! Exact bit-vector scan of every even integer in [4, 10^6] for
//! representability as a sum of two primes.
//!
//! Run: `cargo run --release -p goldbach-density --example goldbach_scan`

use goldbach_density::{goldbach_scan, sieve, PrimeSubset};
use std::sync::Arc;
use std::time::Instant;

fn main() -> goldbach_density::Result<()> {
    let limit = 1_000_000u64;
    let t0 = Instant::now();
    let table = Arc::new(sieve(limit)?);
    println!(
        "sieved {} primes up to {limit} in {:?}",
        table.count(),
        t0.elapsed()
    );

    let all = PrimeSubset::all(table);
    let t1 = Instant::now();
    let out = goldbach_scan(&all, limit)?;
    println!(
        "scanned {} evens in {:?}: {} exceptional",
        out.evens_total,
        t1.elapsed(),
        out.exceptional_count()
    );
    assert_eq!(out.exceptional_count(), 0);
    println!("every even in [4, {limit}] is a sum of two primes");
    Ok(())
}
