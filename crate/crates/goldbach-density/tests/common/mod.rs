//! Shared oracles for the integration suites. Everything here is the slow,
//! obviously-correct route: direct O(N^2) transforms and convolutions,
//! double-loop Goldbach scans. None of it touches the fast paths it checks.

#![allow(dead_code)]

use goldbach_density::CyclicFunction;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::num_complex::Complex64;

/// Direct evaluation of f_hat(r) = (1/N) sum_n f(n) e^{-2 pi i rn/N}.
pub fn dft_direct(f: &CyclicFunction) -> Vec<Complex64> {
    let n = f.len();
    let tau = -2.0 * std::f64::consts::PI / n as f64;
    (0..n)
        .map(|r| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, &v) in f.values().iter().enumerate() {
                // reduce r*i mod n before the trig call
                let k = (r * i) % n;
                let phase = tau * k as f64;
                acc += v * Complex64::new(phase.cos(), phase.sin());
            }
            acc / n as f64
        })
        .collect()
}

/// Direct evaluation of the expectation-normalized cyclic convolution.
pub fn convolve_direct(f1: &CyclicFunction, f2: &CyclicFunction) -> Vec<f64> {
    let n = f1.len();
    assert_eq!(n, f2.len());
    (0..n)
        .map(|m| {
            let mut s = 0.0;
            for k in 0..n {
                s += f1.value(k) * f2.value((m + n - k) % n);
            }
            s / n as f64
        })
        .collect()
}

/// Random values in [0, hi), seeded.
pub fn random_nonneg(n: usize, hi: f64, seed: u64) -> CyclicFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    CyclicFunction::new((0..n).map(|_| rng.random::<f64>() * hi).collect()).unwrap()
}

/// Double-loop Goldbach oracle: even n in [4, limit] with no p + q = n,
/// both from `primes` (sorted ascending).
pub fn naive_exceptional_evens(primes: &[u64], limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 4u64;
    while n <= limit {
        let mut found = false;
        for &p in primes {
            if p > n / 2 {
                break;
            }
            if primes.binary_search(&(n - p)).is_ok() {
                found = true;
                break;
            }
        }
        if !found {
            out.push(n);
        }
        n += 2;
    }
    out
}

pub fn seeded_coin(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
