//! Prime generation: a segmented sieve of Eratosthenes producing a dense
//! primality bit vector over [0, limit].

use crate::bits::Bits;
use crate::error::{Error, Result};

const SEGMENT: usize = 1 << 18;

/// Exact primality table over `[0, limit]` (inclusive).
#[derive(Clone, Debug)]
pub struct PrimeTable {
    limit: u64,
    is_prime: Bits,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn is_prime(&self, n: u64) -> bool {
        n <= self.limit && self.is_prime.get(n as usize)
    }

    pub fn count(&self) -> usize {
        self.is_prime.count_ones()
    }

    /// Number of primes <= x (requires x <= limit).
    pub fn count_up_to(&self, x: u64) -> usize {
        assert!(x <= self.limit);
        self.primes().take_while(|&p| p <= x).count()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.is_prime.iter_ones().map(|i| i as u64)
    }

    pub fn bits(&self) -> &Bits {
        &self.is_prime
    }

    pub(crate) fn from_bits(limit: u64, is_prime: Bits) -> Self {
        PrimeTable { limit, is_prime }
    }
}

/// Segmented sieve of Eratosthenes up to `limit` inclusive.
pub fn sieve(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::LimitTooSmall(limit));
    }
    let n = limit as usize;
    let mut bits = Bits::new(n + 1);

    // base primes up to sqrt(limit)
    let root = (limit as f64).sqrt() as usize + 1;
    let mut base_composite = vec![false; root + 1];
    let mut base_primes: Vec<usize> = Vec::new();
    for p in 2..=root {
        if !base_composite[p] {
            base_primes.push(p);
            let mut q = p * p;
            while q <= root {
                base_composite[q] = true;
                q += p;
            }
        }
    }

    let mut segment = vec![false; SEGMENT];
    let mut lo = 2usize;
    while lo <= n {
        let hi = (lo + SEGMENT - 1).min(n);
        let width = hi - lo + 1;
        segment[..width].fill(false);
        for &p in &base_primes {
            if p * p > hi {
                break;
            }
            let mut start = p * p;
            if start < lo {
                start = lo.div_ceil(p) * p;
            }
            let mut q = start;
            while q <= hi {
                segment[q - lo] = true;
                q += p;
            }
        }
        for (off, &composite) in segment[..width].iter().enumerate() {
            if !composite {
                bits.set(lo + off);
            }
        }
        lo = hi + 1;
    }

    Ok(PrimeTable::from_bits(limit, bits))
}

/// Product of all primes p <= z.
pub fn primorial(z: u64) -> u64 {
    let mut w = 1u64;
    for p in 2..=z {
        if is_prime_small(p) {
            w = w.checked_mul(p).expect("primorial overflow");
        }
    }
    w
}

fn is_prime_small(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
