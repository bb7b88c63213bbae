//! Builds the extremal subset pairs whose cardinality sum lands exactly on
//! the local threshold while their sumset still misses the class 1 mod m.
//!
//! Run: `cargo run --release -p goldbach-density --example sharp_construction`

use goldbach_density::{
    goldbach_threshold, sharp_construction, sumset, SharpConstructionParams, SquarefreeModulus,
};
use num_rational::BigRational;

fn main() -> goldbach_density::Result<()> {
    for m in [15u64, 105, 1155] {
        let modulus = SquarefreeModulus::new(m)?;
        let params = SharpConstructionParams::balanced(modulus.clone())?;
        let (a, b) = sharp_construction(&params);
        let threshold = goldbach_threshold(&modulus);
        let sum = BigRational::from_integer((a.cardinality() + b.cardinality()).into());
        let s = sumset(&a, &b)?;

        println!("m = {m} = {:?}", modulus.primes());
        println!(
            "  x = {}, y = {} (x + y = largest prime factor)",
            params.x(),
            params.y()
        );
        println!(
            "  |A| = {}, |B| = {}, |A| + |B| = {} vs threshold {}",
            a.cardinality(),
            b.cardinality(),
            a.cardinality() + b.cardinality(),
            threshold
        );
        println!(
            "  sumset covers {}/{} residues, 1 in A+B: {}",
            s.cardinality(),
            m,
            s.contains(1)
        );
        assert_eq!(sum, threshold);
        assert!(!s.contains(1));
        println!();
    }
    println!("each pair sits exactly on the threshold and misses 1 mod m");
    Ok(())
}
