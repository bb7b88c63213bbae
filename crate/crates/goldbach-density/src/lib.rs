//! Exact and spectral instruments for density-restricted binary Goldbach
//! experiments: the local sumset theorem over Z_m with its sharp extremal
//! construction, a Fourier-analytic transference pipeline over Z_N, and
//! W-tricked prime-subset scans for exceptional even integers.
//!
//! Everything combinatorial is exact (bit vectors, rational thresholds);
//! everything spectral is double precision with measured certificates.
//!
//! ## Examples
//!
//! One runnable example per capability:
//!
//! ```text
//! examples/
//! ├── local_theorem.rs        # exhaustive verification over Z_15
//! ├── sharp_construction.rs   # extremal sets attaining the threshold
//! ├── spectral_toolkit.rs     # transforms, large spectra, Bohr sets
//! ├── transference_demo.rs    # the decomposition pipeline end to end
//! ├── goldbach_scan.rs        # representability of evens up to 10^6
//! ├── counterexample_scan.rs  # a dense prime subset missing a class
//! ├── majorant_stats.rs       # W-trick weight measurements
//! └── density_profile.rs      # per-class densities of interval unions
//! ```
//!
//! ```bash
//! cargo run --release -p goldbach-density --example local_theorem
//! cargo run --release -p goldbach-density --example goldbach_scan
//! ```
//!
//! The same capabilities are scriptable through the `goldbach` binary
//! (`local-check`, `goldbach-scan`, `counterexample`, `transfer-demo`,
//! `density-profile`, `sieve-cache`), which emits structured report
//! documents.

pub mod bits;
pub mod bohr;
pub mod error;
pub mod experiments;
pub mod fourier;
pub mod io;
pub mod local;
pub mod primes;
pub mod report;
pub mod scan;
pub mod subsets;
pub mod transfer;
pub mod wtrick;

pub use bohr::{approximant, bohr_set, large_spectrum, BohrSet, FrequencySet};
pub use error::{Error, Result};
pub use fourier::{convolve, dft, idft, CyclicFunction, Spectrum};
pub use local::{
    goldbach_threshold, reduced_residues, sharp_construction, sumset, unit_shift_count,
    verify_local_theorem, ResidueSet, SharpConstructionParams, SquarefreeModulus, VerifyMode,
};
pub use primes::{primorial, sieve, PrimeTable};
pub use scan::goldbach_scan;
pub use subsets::{
    counterexample_subset, interval_union_subset, relative_density, PrimeSubset, SubsetDescriptor,
};
pub use transfer::{
    check_hypotheses, decompose, lower_bound_check, run_transference, TransferenceParams,
    TransferenceReport,
};
pub use wtrick::{majorant, weighted_subset, WTrickContext};
