//! Exact Goldbach representability scans: which even n in [4, limit] are
//! sums of two primes from a subset. Pure bit-vector arithmetic: for each
//! subset prime p up to limit/2, OR the subset vector shifted by p. Every
//! even sum has its smaller summand at most limit/2, so those shifts
//! saturate the reachable set.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::subsets::PrimeSubset;
use std::collections::BTreeMap;

/// Default memory budget for the two scan bit vectors.
pub const SCAN_MEMORY_BUDGET_BYTES: u64 = 2 << 30;

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub limit: u64,
    /// Even n in [4, limit] with no representation, ascending.
    pub exceptional: Vec<u64>,
    pub evens_total: u64,
    pub subset_size: u64,
}

impl ScanOutcome {
    pub fn exceptional_count(&self) -> u64 {
        self.exceptional.len() as u64
    }

    pub fn density_among_evens(&self) -> f64 {
        if self.evens_total == 0 {
            0.0
        } else {
            self.exceptional.len() as f64 / self.evens_total as f64
        }
    }

    /// Exceptional counts keyed by n mod m.
    pub fn by_residue(&self, m: u64) -> BTreeMap<u64, u64> {
        let mut map = BTreeMap::new();
        for &n in &self.exceptional {
            *map.entry(n % m).or_insert(0) += 1;
        }
        map
    }
}

pub fn estimate_scan_bytes(limit: u64) -> u64 {
    2 * (limit / 8 + 16)
}

/// Scans every even n in [4, limit].
pub fn goldbach_scan(subset: &PrimeSubset, limit: u64) -> Result<ScanOutcome> {
    if limit < 4 {
        return Err(Error::InvalidParameter(format!(
            "scan limit {limit} below 4"
        )));
    }
    if limit > subset.table().limit() {
        return Err(Error::TableTooSmall {
            needed: limit,
            limit: subset.table().limit(),
        });
    }
    let estimate = estimate_scan_bytes(limit);
    if estimate > SCAN_MEMORY_BUDGET_BYTES {
        return Err(Error::MemoryBudget {
            limit,
            estimate_bytes: estimate,
            budget_bytes: SCAN_MEMORY_BUDGET_BYTES,
        });
    }

    let len = limit as usize + 1;
    let mut members = Bits::new(len);
    for p in subset.primes().take_while(|&p| p <= limit) {
        members.set(p as usize);
    }
    let subset_size = members.count_ones() as u64;

    let mut sums = Bits::new(len);
    let half = limit / 2;
    for p in subset.primes().take_while(|&p| p <= half) {
        sums.or_shifted(&members, p as usize);
    }

    let mut exceptional = Vec::new();
    let mut n = 4u64;
    while n <= limit {
        if !sums.get(n as usize) {
            exceptional.push(n);
        }
        n += 2;
    }
    let evens_total = if limit >= 4 { limit / 2 - 1 } else { 0 };
    Ok(ScanOutcome {
        limit,
        exceptional,
        evens_total,
        subset_size,
    })
}
