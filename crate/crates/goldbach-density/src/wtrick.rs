//! W-trick weights: slicing the primes in a reduced class b mod W into
//! Z_N and weighting by (phi(W)/W) log(Wn + b).
//!
//! Z_N is identified with {1, ..., N}; the value at n is stored at array
//! index n mod N, so index 0 carries n = N. Off-by-one here would break
//! the congruence-to-equality lift, so the convention is fixed once, here.

use crate::error::{Error, Result};
use crate::fourier::CyclicFunction;
use crate::primes::{gcd, PrimeTable};
use crate::subsets::PrimeSubset;
use serde::{Deserialize, Serialize};

/// The tuple (W, b, M, N, cap) with N = floor(M / W).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct WTrickContext {
    w: u64,
    b: u64,
    big_m: u64,
    n: usize,
    cap: f64,
}

impl WTrickContext {
    pub fn new(w: u64, b: u64, big_m: u64, cap: f64) -> Result<Self> {
        if w == 0 {
            return Err(Error::InvalidParameter("W must be positive".into()));
        }
        if w > 1 && b >= w {
            return Err(Error::OutOfRange {
                what: "residue b",
                value: b as i64,
                lo: 0,
                hi: w as i64 - 1,
            });
        }
        if gcd(b % w, w) != 1 {
            return Err(Error::InvalidParameter(format!(
                "b = {b} is not a reduced residue mod {w}"
            )));
        }
        let cap_ok = cap > 0.0 && cap <= 1.0;
        if !cap_ok {
            return Err(Error::InvalidParameter(format!(
                "cap = {cap} outside (0, 1]"
            )));
        }
        let n = (big_m / w) as usize;
        if n == 0 {
            return Err(Error::InvalidParameter(format!(
                "M = {big_m} below W = {w}"
            )));
        }
        Ok(WTrickContext {
            w,
            b: b % w,
            big_m,
            n,
            cap,
        })
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn big_m(&self) -> u64 {
        self.big_m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> f64 {
        self.cap
    }

    /// Largest integer the weights can reference: W * N + b.
    pub fn max_lift(&self) -> u64 {
        self.w * self.n as u64 + self.b
    }

    pub fn phi_w(&self) -> u64 {
        euler_phi(self.w)
    }
}

fn euler_phi(w: u64) -> u64 {
    let mut n = w;
    let mut phi = w;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            phi -= phi / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// nu(n) = (phi(W)/W) log(Wn + b) at prime points Wn + b, 0 elsewhere,
/// for n in {1, ..., N}. Mean tends to 1 for large N.
pub fn majorant(ctx: &WTrickContext, table: &PrimeTable) -> Result<CyclicFunction> {
    weights(ctx, table, |_| true, None)
}

/// f(n) = the majorant value when Wn + b lies in the subset and
/// Wn + b <= cap * M, else 0. Pointwise below the majorant by construction.
pub fn weighted_subset(ctx: &WTrickContext, subset: &PrimeSubset) -> Result<CyclicFunction> {
    weights(
        ctx,
        subset.table(),
        |p| subset.contains(p),
        Some(ctx.cap * ctx.big_m as f64),
    )
}

fn weights<F: Fn(u64) -> bool>(
    ctx: &WTrickContext,
    table: &PrimeTable,
    keep: F,
    height_cap: Option<f64>,
) -> Result<CyclicFunction> {
    let needed = ctx.max_lift();
    if needed > table.limit() {
        return Err(Error::TableTooSmall {
            needed,
            limit: table.limit(),
        });
    }
    let n = ctx.n;
    let scale = ctx.phi_w() as f64 / ctx.w as f64;
    let mut values = vec![0.0; n];
    for k in 1..=n as u64 {
        let p = ctx.w * k + ctx.b;
        if table.is_prime(p) && keep(p) && height_cap.is_none_or(|cap| p as f64 <= cap) {
            values[(k as usize) % n] = scale * (p as f64).ln();
        }
    }
    CyclicFunction::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;
    use crate::subsets::PrimeSubset;
    use std::sync::Arc;

    #[test]
    fn context_validation() {
        assert!(WTrickContext::new(0, 0, 100, 1.0).is_err());
        assert!(WTrickContext::new(6, 3, 100, 1.0).is_err());
        assert!(WTrickContext::new(6, 7, 100, 1.0).is_err());
        assert!(WTrickContext::new(6, 5, 100, 0.0).is_err());
        assert!(WTrickContext::new(6, 5, 3, 1.0).is_err());
        let ctx = WTrickContext::new(6, 5, 100, 1.0).unwrap();
        assert_eq!(ctx.n(), 16);
        assert_eq!(ctx.phi_w(), 2);
        let unit = WTrickContext::new(1, 0, 50, 1.0).unwrap();
        assert_eq!(unit.n(), 50);
        assert_eq!(unit.phi_w(), 1);
    }

    #[test]
    fn majorant_w2_small() {
        let table = sieve(25).unwrap();
        let ctx = WTrickContext::new(2, 1, 20, 1.0).unwrap();
        assert_eq!(ctx.n(), 10);
        let nu = majorant(&ctx, &table).unwrap();
        // 2n + 1 prime for n in {1,2,3,5,6,8,9}; n = 10 -> 21 composite,
        // stored at index 0
        let nonzero: Vec<usize> = (0..10).filter(|&i| nu.value(i) > 0.0).collect();
        assert_eq!(nonzero, vec![1, 2, 3, 5, 6, 8, 9]);
        assert_eq!(nu.value(0), 0.0);
        for n in [1usize, 2, 3, 5, 6, 8, 9] {
            let p = (2 * n + 1) as f64;
            assert!((nu.value(n) - 0.5 * p.ln()).abs() < 1e-15);
        }
    }

    #[test]
    fn majorant_index_zero_carries_n() {
        // N = 9, W = 2, b = 1: n = 9 lifts to 19 (prime), stored at index 0
        let table = sieve(25).unwrap();
        let ctx = WTrickContext::new(2, 1, 18, 1.0).unwrap();
        assert_eq!(ctx.n(), 9);
        let nu = majorant(&ctx, &table).unwrap();
        assert!((nu.value(0) - 0.5 * 19f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn majorant_mean_near_one() {
        let table = sieve(200_001).unwrap();
        let ctx = WTrickContext::new(2, 1, 200_000, 1.0).unwrap();
        let nu = majorant(&ctx, &table).unwrap();
        assert!((nu.mean() - 1.0).abs() <= 0.05, "mean {}", nu.mean());
    }

    #[test]
    fn weighted_full_subset_equals_majorant() {
        // boundary lift W*N + b = 2001 = 3 * 667 is composite, so the
        // cap at M does not separate f from nu anywhere
        let table = Arc::new(sieve(2_001).unwrap());
        let ctx = WTrickContext::new(2, 1, 2_000, 1.0).unwrap();
        let nu = majorant(&ctx, &table).unwrap();
        let all = PrimeSubset::all(table.clone());
        let f = weighted_subset(&ctx, &all).unwrap();
        assert_eq!(f.values(), nu.values());

        let none = PrimeSubset::filtered(table, |_| false);
        let zero = weighted_subset(&ctx, &none).unwrap();
        assert!(zero.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn cap_truncates_top() {
        let table = Arc::new(sieve(25).unwrap());
        let ctx = WTrickContext::new(2, 1, 20, 0.9).unwrap();
        let all = PrimeSubset::all(table.clone());
        let f = weighted_subset(&ctx, &all).unwrap();
        let nu = majorant(&ctx, &table).unwrap();
        // cap * M = 18: n = 9 lifts to 19 > 18, zeroed in f only
        assert_eq!(f.value(9), 0.0);
        assert!(nu.value(9) > 0.0);
        for i in 0..9 {
            assert_eq!(f.value(i), nu.value(i), "i = {i}");
        }
    }

    #[test]
    fn weighted_below_majorant_pointwise() {
        let table = Arc::new(sieve(10_001).unwrap());
        let ctx = WTrickContext::new(6, 1, 10_000, 0.97).unwrap();
        let nu = majorant(&ctx, &table).unwrap();
        let sub = PrimeSubset::filtered(table, |p| p % 7 != 3);
        let f = weighted_subset(&ctx, &sub).unwrap();
        for i in 0..ctx.n() {
            assert!(f.value(i) <= nu.value(i), "i = {i}");
        }
    }

    #[test]
    fn table_too_small_rejected() {
        let table = sieve(50).unwrap();
        let ctx = WTrickContext::new(2, 1, 200, 1.0).unwrap();
        assert!(matches!(
            majorant(&ctx, &table),
            Err(Error::TableTooSmall { .. })
        ));
    }
}
