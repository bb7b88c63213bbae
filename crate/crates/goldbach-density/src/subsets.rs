//! Subsets of the primes with provenance descriptors: the full set, the
//! residue-class counterexample construction, interval unions, and
//! explicit lists. Densities are measured at finite height.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::local::{sharp_construction, SharpConstructionParams, SquarefreeModulus};
use crate::primes::{gcd, PrimeTable};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubsetDescriptor {
    All,
    /// Primes coprime to m whose residue mod m lies in `classes`.
    ResidueConstruction {
        m: u64,
        classes: Vec<u64>,
    },
    /// Primes in [1, N_1] union [alpha N_1, N_2] union [alpha N_2, N_3] ...
    IntervalUnion {
        alpha: f64,
        cutoffs: Vec<u64>,
    },
    Explicit {
        count: u64,
    },
}

/// A subset of the primes of a base table, stored as a bit vector over
/// [0, limit] whose set bits are always prime.
#[derive(Clone, Debug)]
pub struct PrimeSubset {
    table: Arc<PrimeTable>,
    membership: Bits,
    descriptor: SubsetDescriptor,
}

impl PrimeSubset {
    pub fn all(table: Arc<PrimeTable>) -> Self {
        let membership = table.bits().clone();
        PrimeSubset {
            table,
            membership,
            descriptor: SubsetDescriptor::All,
        }
    }

    /// Keeps the primes selected by `keep`; descriptor marks an explicit list.
    pub fn filtered<F: Fn(u64) -> bool>(table: Arc<PrimeTable>, keep: F) -> Self {
        let mut membership = Bits::new(table.limit() as usize + 1);
        for p in table.primes() {
            if keep(p) {
                membership.set(p as usize);
            }
        }
        let count = membership.count_ones() as u64;
        PrimeSubset {
            table,
            membership,
            descriptor: SubsetDescriptor::Explicit { count },
        }
    }

    pub fn table(&self) -> &Arc<PrimeTable> {
        &self.table
    }

    pub fn descriptor(&self) -> &SubsetDescriptor {
        &self.descriptor
    }

    pub fn contains(&self, p: u64) -> bool {
        p <= self.table.limit() && self.membership.get(p as usize)
    }

    pub fn count(&self) -> u64 {
        self.membership.count_ones() as u64
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.membership.iter_ones().map(|i| i as u64)
    }

    pub fn count_up_to(&self, x: u64) -> u64 {
        self.primes().take_while(|&p| p <= x).count() as u64
    }

    /// |A intersect {n <= height, n = b mod w}|.
    pub fn count_in_class(&self, w: u64, b: u64, height: u64) -> u64 {
        self.primes()
            .take_while(|&p| p <= height)
            .filter(|&p| p % w == b % w)
            .count() as u64
    }
}

fn check_class(w: u64, b: u64) -> Result<()> {
    if w == 0 {
        return Err(Error::InvalidParameter("W must be positive".into()));
    }
    if b >= w && w > 1 {
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
    Ok(())
}

/// Finite-height relative density of A among primes in the class b mod W:
/// |A and class up to M| / |P and class up to M|.
pub fn relative_density(subset: &PrimeSubset, w: u64, b: u64, height: u64) -> Result<f64> {
    check_class(w, b)?;
    if height > subset.table().limit() {
        return Err(Error::TableTooSmall {
            needed: height,
            limit: subset.table().limit(),
        });
    }
    let mut num = 0u64;
    let mut den = 0u64;
    for p in subset.table().primes().take_while(|&p| p <= height) {
        if p % w == b % w {
            den += 1;
            if subset.contains(p) {
                num += 1;
            }
        }
    }
    if den == 0 {
        return Err(Error::NoPrimesInClass { w, b, m: height });
    }
    Ok(num as f64 / den as f64)
}

/// The density counterexample: the local set from the symmetric extremal
/// construction x = y = (p_s - 1)/2 lifted to primes. Sums of two members
/// avoid every integer congruent to 1 mod m. Primes dividing m are
/// excluded (they occupy non-unit classes).
pub fn counterexample_subset(
    modulus: &SquarefreeModulus,
    table: Arc<PrimeTable>,
) -> Result<PrimeSubset> {
    let params = SharpConstructionParams::symmetric(modulus.clone())?;
    let (local, _) = sharp_construction(&params);
    let classes = local.elements();
    let m = modulus.m();
    let mut membership = Bits::new(table.limit() as usize + 1);
    let mut in_class = vec![false; m as usize];
    for &c in &classes {
        in_class[c as usize] = true;
    }
    for p in table.primes() {
        if gcd(p, m) == 1 && in_class[(p % m) as usize] {
            membership.set(p as usize);
        }
    }
    Ok(PrimeSubset {
        table,
        membership,
        descriptor: SubsetDescriptor::ResidueConstruction { m, classes },
    })
}

/// Primes in [1, N_1] union [alpha N_1, N_2] union ... for alpha > 2 and
/// cutoffs N_1 < N_2 < ... with N_{i+1} >= alpha N_i.
pub fn interval_union_subset(
    alpha: f64,
    cutoffs: &[u64],
    table: Arc<PrimeTable>,
) -> Result<PrimeSubset> {
    let alpha_ok = alpha > 2.0;
    if !alpha_ok {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} must exceed 2"
        )));
    }
    if cutoffs.is_empty() {
        return Err(Error::InvalidParameter("cutoffs must be nonempty".into()));
    }
    for w in cutoffs.windows(2) {
        if (w[1] as f64) < alpha * w[0] as f64 {
            return Err(Error::InvalidParameter(format!(
                "cutoff {} below alpha * {} = {}",
                w[1],
                w[0],
                alpha * w[0] as f64
            )));
        }
    }
    let in_union = |p: u64| -> bool {
        if p <= cutoffs[0] {
            return true;
        }
        for i in 0..cutoffs.len() - 1 {
            if (p as f64) >= alpha * cutoffs[i] as f64 && p <= cutoffs[i + 1] {
                return true;
            }
        }
        false
    };
    let mut membership = Bits::new(table.limit() as usize + 1);
    for p in table.primes() {
        if in_union(p) {
            membership.set(p as usize);
        }
    }
    Ok(PrimeSubset {
        table,
        membership,
        descriptor: SubsetDescriptor::IntervalUnion {
            alpha,
            cutoffs: cutoffs.to_vec(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;

    fn table(limit: u64) -> Arc<PrimeTable> {
        Arc::new(sieve(limit).unwrap())
    }

    #[test]
    fn all_primes_density_one() {
        let t = table(10_000);
        let a = PrimeSubset::all(t);
        assert_eq!(a.count(), 1229);
        for (w, b) in [(1u64, 0u64), (2, 1), (15, 4)] {
            assert_eq!(relative_density(&a, w, b, 10_000).unwrap(), 1.0);
        }
    }

    #[test]
    fn empty_subset_density_zero() {
        let t = table(1_000);
        let none = PrimeSubset::filtered(t, |_| false);
        assert_eq!(none.count(), 0);
        assert_eq!(relative_density(&none, 1, 0, 1_000).unwrap(), 0.0);
    }

    #[test]
    fn class_counts_agree_with_density_ratio() {
        let t = table(10_000);
        let a = PrimeSubset::filtered(t.clone(), |p| p % 7 != 2);
        for (w, b) in [(1u64, 0u64), (3, 1), (4, 3)] {
            let num = a.count_in_class(w, b, 10_000);
            let den = PrimeSubset::all(t.clone()).count_in_class(w, b, 10_000);
            let ratio = relative_density(&a, w, b, 10_000).unwrap();
            assert_eq!(ratio, num as f64 / den as f64, "W = {w}, b = {b}");
        }
    }

    #[test]
    fn half_interval_density() {
        let t = table(1_000_000);
        let a = PrimeSubset::filtered(t, |p| p <= 500_000);
        let d = relative_density(&a, 1, 0, 1_000_000).unwrap();
        // pi(5e5) / pi(1e6) = 41538 / 78498
        assert!((d - 41_538.0 / 78_498.0).abs() < 1e-12);
        assert!((d - 0.5292).abs() < 1e-3);
    }

    #[test]
    fn bad_classes_rejected() {
        let t = table(1_000);
        let a = PrimeSubset::all(t);
        assert!(relative_density(&a, 6, 3, 1_000).is_err());
        assert!(relative_density(&a, 6, 8, 1_000).is_err());
        assert!(relative_density(&a, 0, 0, 1_000).is_err());
        assert!(relative_density(&a, 2, 1, 10_000).is_err(), "beyond table");
        // no prime is 1 mod 97 below 6
        assert!(matches!(
            relative_density(&a, 97, 1, 6),
            Err(crate::error::Error::NoPrimesInClass { .. })
        ));
    }

    #[test]
    fn counterexample_m15_membership() {
        let md = SquarefreeModulus::new(15).unwrap();
        let t = table(100);
        let a = counterexample_subset(&md, t).unwrap();
        match a.descriptor() {
            SubsetDescriptor::ResidueConstruction { m, classes } => {
                assert_eq!(*m, 15);
                assert_eq!(classes, &[1, 2, 4, 7, 11, 13]);
            }
            other => panic!("wrong descriptor {other:?}"),
        }
        // oracle: enumerate primes to 100 with residue in the local set
        let expect: Vec<u64> = [
            2u64, 7, 11, 13, 17, 19, 31, 37, 41, 43, 47, 61, 67, 71, 73, 79, 97,
        ]
        .into();
        let got: Vec<u64> = a.primes().collect();
        assert_eq!(got, expect);
        // 3 and 5 divide 15 and are excluded
        assert!(!a.contains(3) && !a.contains(5));
    }

    #[test]
    fn counterexample_residue_coherence() {
        let md = SquarefreeModulus::new(15).unwrap();
        let t = table(100_000);
        let a = counterexample_subset(&md, t).unwrap();
        let classes = [1u64, 2, 4, 7, 11, 13];
        for p in a.primes() {
            assert!(classes.contains(&(p % 15)), "p = {p}");
        }
    }

    #[test]
    fn counterexample_m3() {
        let md = SquarefreeModulus::new(3).unwrap();
        let t = table(50);
        let a = counterexample_subset(&md, t).unwrap();
        let got: Vec<u64> = a.primes().collect();
        assert_eq!(got, vec![7, 13, 19, 31, 37, 43]);
    }

    #[test]
    fn counterexample_density_near_three_quarters() {
        let md = SquarefreeModulus::new(15).unwrap();
        let t = table(1_000_000);
        let a = counterexample_subset(&md, t).unwrap();
        let d = relative_density(&a, 1, 0, 1_000_000).unwrap();
        assert!((d - 0.75).abs() < 0.05, "measured {d}");
    }

    #[test]
    fn interval_union_examples() {
        let t = table(200);
        let a = interval_union_subset(3.0, &[10, 100], t.clone()).unwrap();
        let got: Vec<u64> = a.primes().collect();
        let mut expect = vec![2u64, 3, 5, 7];
        expect.extend(t.primes().filter(|&p| (30..=100).contains(&p)));
        assert_eq!(got, expect);

        // single cutoff equal to the limit keeps every prime
        let all = interval_union_subset(3.0, &[200], t.clone()).unwrap();
        assert_eq!(all.count(), t.count() as u64);

        assert!(interval_union_subset(2.0, &[10, 100], t.clone()).is_err());
        assert!(interval_union_subset(3.0, &[10, 20], t.clone()).is_err());
        assert!(interval_union_subset(3.0, &[], t).is_err());
    }
}
