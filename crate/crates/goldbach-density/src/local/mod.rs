//! The local sumset theorem over Z_m for odd squarefree m: exact thresholds,
//! sumsets of unit subsets, the extremal construction that attains the
//! threshold, and exhaustive/sampled verification.
//!
//! Everything here is exact: residue sets are dense bit vectors and the
//! threshold is a rational number compared without rounding.

mod verify;

pub use verify::{verify_local_theorem, LocalCheckReport, PairWitness, VerifyMode};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::primes::gcd;
use num_bigint::BigInt;
use num_rational::BigRational;

/// An odd squarefree modulus m with its prime factorization and totient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeModulus {
    m: u64,
    primes: Vec<u64>,
    phi: u64,
}

impl SquarefreeModulus {
    /// Factorizes `m` and checks it is positive, odd and squarefree.
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if m.is_multiple_of(2) {
            return Err(Error::NotOdd(m));
        }
        let mut primes = Vec::new();
        let mut rest = m;
        let mut d = 3u64;
        while d * d <= rest {
            if rest.is_multiple_of(d) {
                rest /= d;
                if rest.is_multiple_of(d) {
                    return Err(Error::NotSquarefree(m));
                }
                primes.push(d);
            }
            d += 2;
        }
        if rest > 1 {
            primes.push(rest);
        }
        let phi = primes.iter().map(|p| p - 1).product::<u64>().max(1);
        Ok(SquarefreeModulus { m, primes, phi })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Distinct odd prime factors, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.primes.last().copied()
    }

    /// Reduced residues mod m, ascending. For m = 1 this is {0}.
    pub fn units(&self) -> Vec<u64> {
        (0..self.m).filter(|&a| gcd(a, self.m) == 1).collect()
    }
}

/// A subset of Z_m as a dense bit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSet {
    modulus: SquarefreeModulus,
    members: Bits,
    units_only: bool,
}

impl ResidueSet {
    pub fn empty(modulus: &SquarefreeModulus, units_only: bool) -> Self {
        ResidueSet {
            modulus: modulus.clone(),
            members: Bits::new(modulus.m as usize),
            units_only,
        }
    }

    /// Builds a set from explicit residues. When `units_only` every element
    /// must be coprime to m.
    pub fn from_elements<I: IntoIterator<Item = u64>>(
        modulus: &SquarefreeModulus,
        elements: I,
        units_only: bool,
    ) -> Result<Self> {
        let mut set = ResidueSet::empty(modulus, units_only);
        for e in elements {
            if e >= modulus.m {
                return Err(Error::OutOfRange {
                    what: "residue",
                    value: e as i64,
                    lo: 0,
                    hi: modulus.m as i64 - 1,
                });
            }
            if units_only && gcd(e, modulus.m) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "{e} is not a unit mod {}",
                    modulus.m
                )));
            }
            set.members.set(e as usize);
        }
        Ok(set)
    }

    pub fn modulus(&self) -> &SquarefreeModulus {
        &self.modulus
    }

    pub fn units_only(&self) -> bool {
        self.units_only
    }

    pub fn cardinality(&self) -> u64 {
        self.members.count_ones() as u64
    }

    pub fn contains(&self, r: u64) -> bool {
        r < self.modulus.m && self.members.get(r as usize)
    }

    pub fn elements(&self) -> Vec<u64> {
        self.members.iter_ones().map(|i| i as u64).collect()
    }

    pub fn is_all_of_zm(&self) -> bool {
        self.members.all_ones()
    }

    pub fn is_subset_of(&self, other: &ResidueSet) -> bool {
        self.modulus.m == other.modulus.m && self.elements().iter().all(|&e| other.contains(e))
    }
}

/// All reduced residue classes mod m; cardinality phi(m).
pub fn reduced_residues(modulus: &SquarefreeModulus) -> ResidueSet {
    let mut set = ResidueSet::empty(modulus, true);
    for a in modulus.units() {
        set.members.set(a as usize);
    }
    set
}

/// {a + b mod m : a in A, b in B}. Shifted-OR over the smaller set.
pub fn sumset(a: &ResidueSet, b: &ResidueSet) -> Result<ResidueSet> {
    if a.modulus.m != b.modulus.m {
        return Err(Error::ModulusMismatch(a.modulus.m, b.modulus.m));
    }
    let (small, large) = if a.cardinality() <= b.cardinality() {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = ResidueSet::empty(&a.modulus, false);
    for shift in small.members.iter_ones() {
        out.members.or_rotated(&large.members, shift);
    }
    Ok(out)
}

/// The exact rational threshold phi(m) * (2 - prod_{p|m} (p-2)/(p-1)).
/// Any unit subsets with |A| + |B| strictly above it have A + B = Z_m.
pub fn goldbach_threshold(modulus: &SquarefreeModulus) -> BigRational {
    let phi = BigRational::from_integer(BigInt::from(modulus.phi));
    let mut prod = BigRational::from_integer(BigInt::from(1));
    for &p in &modulus.primes {
        prod *= BigRational::new(BigInt::from(p - 2), BigInt::from(p - 1));
    }
    phi * (BigRational::from_integer(BigInt::from(2)) - prod)
}

/// Smallest integer cardinality sum that strictly exceeds the threshold.
pub fn threshold_exceeding_sum(modulus: &SquarefreeModulus) -> u64 {
    let t = goldbach_threshold(modulus);
    let floor = t.floor().to_integer();
    let floor_u: u64 = u64::try_from(floor.clone()).expect("threshold fits u64 at desk scale");
    floor_u + 1
}

/// |{x in Z_m^* : n - x in Z_m^*}| by direct enumeration.
/// Always at least prod_{p|m} (p-2).
pub fn unit_shift_count(modulus: &SquarefreeModulus, n: u64) -> u64 {
    let m = modulus.m;
    debug_assert!(n < m || m == 1);
    (0..m)
        .filter(|&x| gcd(x, m) == 1 && gcd((n + m - x) % m, m) == 1)
        .count() as u64
}

/// Parameters of the extremal construction: local windows {1..x}, {1..y}
/// at the largest prime factor, singletons {1} below it.
#[derive(Clone, Debug)]
pub struct SharpConstructionParams {
    modulus: SquarefreeModulus,
    x: u64,
    y: u64,
}

impl SharpConstructionParams {
    pub fn new(modulus: SquarefreeModulus, x: u64, y: u64) -> Result<Self> {
        let ps = modulus
            .largest_prime()
            .ok_or_else(|| Error::InvalidParameter("m = 1 has no prime factor".into()))?;
        for (what, v) in [("x", x), ("y", y)] {
            if v < 1 || v >= ps {
                return Err(Error::OutOfRange {
                    what: if what == "x" { "x" } else { "y" },
                    value: v as i64,
                    lo: 1,
                    hi: ps as i64 - 1,
                });
            }
        }
        Ok(SharpConstructionParams { modulus, x, y })
    }

    /// x = (p_s - 1)/2, y = p_s - x: the split with x + y = p_s used both for
    /// threshold attainment and (via x = y) the symmetric A = B variant.
    pub fn balanced(modulus: SquarefreeModulus) -> Result<Self> {
        let ps = modulus
            .largest_prime()
            .ok_or_else(|| Error::InvalidParameter("m = 1 has no prime factor".into()))?;
        let x = (ps - 1) / 2;
        SharpConstructionParams::new(modulus, x, ps - x)
    }

    pub fn symmetric(modulus: SquarefreeModulus) -> Result<Self> {
        let ps = modulus
            .largest_prime()
            .ok_or_else(|| Error::InvalidParameter("m = 1 has no prime factor".into()))?;
        let x = (ps - 1) / 2;
        SharpConstructionParams::new(modulus, x, x)
    }

    pub fn modulus(&self) -> &SquarefreeModulus {
        &self.modulus
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }
}

/// Closed-form cardinality of one side of the construction:
/// phi(m) - (p_s - 1 - x) * prod_{i<s} (p_i - 2), an exact integer.
pub fn sharp_cardinality(modulus: &SquarefreeModulus, x: u64) -> u64 {
    let ps = modulus.largest_prime().expect("needs a prime factor");
    let below: u64 = modulus.primes[..modulus.primes.len() - 1]
        .iter()
        .map(|p| p - 2)
        .product();
    modulus.phi - (ps - 1 - x) * below
}

/// Builds the extremal pair (A, B). If x + y <= p_s then 1 is not in A + B.
pub fn sharp_construction(params: &SharpConstructionParams) -> (ResidueSet, ResidueSet) {
    let m = &params.modulus;
    let ps = m.largest_prime().unwrap();
    let side = |window: u64| -> ResidueSet {
        let mut set = ResidueSet::empty(m, true);
        for a in m.units() {
            let hit = m.primes.iter().enumerate().any(|(i, &p)| {
                let r = a % p;
                if p == ps && i == m.primes.len() - 1 {
                    1 <= r && r <= window
                } else {
                    r == 1
                }
            });
            if hit {
                set.members.set(a as usize);
            }
        }
        set
    };
    (side(params.x), side(params.y))
}
