//! Exhaustive and sampled verification of the local sumset theorem.
//!
//! Exhaustive mode walks every pair of unit subsets (2^phi x 2^phi) and is
//! refused for phi(m) > 10. Sampled mode draws pairs uniformly conditioned
//! on |A| + |B| exceeding the threshold: the cardinality pair is sampled
//! from exact binomial weights (BigUint arithmetic), then uniform subsets
//! of those cardinalities.

use super::{goldbach_threshold, sumset, threshold_exceeding_sum, ResidueSet, SquarefreeModulus};
use crate::bits::Bits;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const EXHAUSTIVE_PHI_CAP: u64 = 10;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerifyMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

/// One (A, B) pair, elements sorted ascending.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairWitness {
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    #[serde(rename = "B")]
    pub b: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LocalCheckReport {
    pub modulus: u64,
    pub phi: u64,
    pub threshold_numerator: u64,
    pub threshold_denominator: u64,
    pub mode: VerifyMode,
    /// Pairs whose sumset was actually evaluated.
    pub pairs_checked: u64,
    /// Pairs with |A| + |B| above the threshold that failed A + B = Z_m.
    /// The theorem says this is empty.
    pub violations: Vec<PairWitness>,
    /// Pairs found with |A| + |B| exactly at the threshold and a proper
    /// sumset (exhaustive mode with witness collection only).
    pub sharp_witnesses: Vec<PairWitness>,
}

impl LocalCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_local_theorem(
    modulus: &SquarefreeModulus,
    mode: VerifyMode,
    collect_witnesses: bool,
) -> Result<LocalCheckReport> {
    let threshold = goldbach_threshold(modulus);
    let (num, den) = (
        u64::try_from(threshold.numer().clone()).expect("threshold numerator fits u64"),
        u64::try_from(threshold.denom().clone()).expect("threshold denominator fits u64"),
    );
    let mut report = LocalCheckReport {
        modulus: modulus.m(),
        phi: modulus.phi(),
        threshold_numerator: num,
        threshold_denominator: den,
        mode,
        pairs_checked: 0,
        violations: Vec::new(),
        sharp_witnesses: Vec::new(),
    };
    match mode {
        VerifyMode::Exhaustive => exhaustive(modulus, collect_witnesses, &mut report)?,
        VerifyMode::Sampled { count, seed } => sampled(modulus, count, seed, &mut report)?,
    }
    Ok(report)
}

fn elements_of_mask(units: &[u64], mask: u64) -> Vec<u64> {
    units
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &u)| u)
        .collect()
}

fn exhaustive(
    modulus: &SquarefreeModulus,
    collect_witnesses: bool,
    report: &mut LocalCheckReport,
) -> Result<()> {
    let phi = modulus.phi();
    if phi > EXHAUSTIVE_PHI_CAP {
        return Err(Error::ExhaustiveInfeasible {
            m: modulus.m(),
            phi,
            cap: EXHAUSTIVE_PHI_CAP,
        });
    }
    let units = modulus.units();
    let m = modulus.m() as usize;
    let n_masks: u64 = 1 << phi;
    let s_min = threshold_exceeding_sum(modulus);
    let threshold = goldbach_threshold(modulus);
    // the threshold shell exists only when the threshold is an integer
    let shell = if threshold.is_integer() {
        u64::try_from(threshold.to_integer()).ok()
    } else {
        None
    };

    // per-mask residue bit vectors, reused across the pair loop
    let mut mask_bits: Vec<Bits> = Vec::with_capacity(n_masks as usize);
    for mask in 0..n_masks {
        let mut bits = Bits::new(m);
        for (i, &u) in units.iter().enumerate() {
            if mask >> i & 1 == 1 {
                bits.set(u as usize);
            }
        }
        mask_bits.push(bits);
    }

    let covers_zm = |a_mask: u64, b_mask: u64| -> bool {
        let a = &mask_bits[a_mask as usize];
        let b = &mask_bits[b_mask as usize];
        let mut acc = Bits::new(m);
        for shift in a.iter_ones() {
            acc.or_rotated(b, shift);
            if acc.all_ones() {
                return true;
            }
        }
        acc.all_ones()
    };

    for a_mask in 0..n_masks {
        let ka = a_mask.count_ones() as u64;
        for b_mask in 0..n_masks {
            let kb = b_mask.count_ones() as u64;
            let sum = ka + kb;
            if sum >= s_min {
                report.pairs_checked += 1;
                if !covers_zm(a_mask, b_mask) {
                    report.violations.push(PairWitness {
                        a: elements_of_mask(&units, a_mask),
                        b: elements_of_mask(&units, b_mask),
                    });
                }
            } else if collect_witnesses && Some(sum) == shell {
                report.pairs_checked += 1;
                if !covers_zm(a_mask, b_mask) {
                    report.sharp_witnesses.push(PairWitness {
                        a: elements_of_mask(&units, a_mask),
                        b: elements_of_mask(&units, b_mask),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Cumulative-weight sampler over {0..=phi} x {0..=phi} restricted to
/// kA + kB >= s_min, with weight C(phi, kA) * C(phi, kB).
struct CardinalitySampler {
    phi: u64,
    s_min: u64,
    binom: Vec<BigUint>,
    /// prefix[k] = sum_{j<=k} C(phi, j)
    prefix: Vec<BigUint>,
    /// ka_cumulative[k] = sum_{j<=k} C(phi, j) * S(s_min - j)
    ka_cumulative: Vec<BigUint>,
    total: BigUint,
}

impl CardinalitySampler {
    fn new(phi: u64, s_min: u64) -> Result<Self> {
        let n = phi as usize;
        let mut binom = Vec::with_capacity(n + 1);
        binom.push(BigUint::one());
        for k in 1..=n {
            let next =
                binom.last().unwrap() * BigUint::from(phi - k as u64 + 1) / BigUint::from(k as u64);
            binom.push(next);
        }
        let mut prefix = binom.clone();
        for k in 1..=n {
            prefix[k] = &prefix[k] + &prefix[k - 1];
        }
        let suffix = |j: i64| -> BigUint {
            // sum of C(phi, kb) over kb >= j
            if j <= 0 {
                prefix[n].clone()
            } else if j as usize > n {
                BigUint::zero()
            } else {
                &prefix[n] - &prefix[j as usize - 1]
            }
        };
        let mut ka_cumulative = Vec::with_capacity(n + 1);
        let mut acc = BigUint::zero();
        for (ka, b) in binom.iter().enumerate() {
            acc += b * suffix(s_min as i64 - ka as i64);
            ka_cumulative.push(acc.clone());
        }
        let total = acc;
        if total.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "no subset pairs satisfy |A| + |B| >= {s_min} with phi = {phi}"
            )));
        }
        Ok(CardinalitySampler {
            phi,
            s_min,
            binom,
            prefix,
            ka_cumulative,
            total,
        })
    }

    fn uniform_below(&self, bound: &BigUint, rng: &mut ChaCha8Rng) -> BigUint {
        let bits = bound.bits();
        let bytes = bits.div_ceil(8) as usize;
        let top_mask: u8 = if bits.is_multiple_of(8) {
            0xff
        } else {
            (1u8 << (bits % 8)) - 1
        };
        loop {
            let mut buf = vec![0u8; bytes];
            rng.fill(buf.as_mut_slice());
            if let Some(last) = buf.last_mut() {
                *last &= top_mask;
            }
            let v = BigUint::from_bytes_le(&buf);
            if &v < bound {
                return v;
            }
        }
    }

    /// Draws a cardinality pair (kA, kB) with kA + kB >= s_min, distributed
    /// as uniform over all qualifying subset pairs.
    fn draw(&self, rng: &mut ChaCha8Rng) -> (u64, u64) {
        let x = self.uniform_below(&self.total, rng);
        let ka = self.ka_cumulative.partition_point(|c| c <= &x) as u64;
        // conditional: kb >= max(s_min - ka, 0), weight C(phi, kb)
        let j0 = self.s_min.saturating_sub(ka) as usize;
        let base = if j0 == 0 {
            BigUint::zero()
        } else {
            self.prefix[j0 - 1].clone()
        };
        let span = &self.prefix[self.phi as usize] - &base;
        let y = self.uniform_below(&span, rng) + &base;
        let kb = self.prefix.partition_point(|c| c <= &y) as u64;
        debug_assert!(ka + kb >= self.s_min);
        debug_assert!(self.binom[ka as usize] > BigUint::zero());
        (ka, kb)
    }
}

fn random_subset(units: &[u64], k: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut idx: Vec<usize> = (0..units.len()).collect();
    let k = k as usize;
    for i in 0..k {
        let j = rng.random_range(i..idx.len());
        idx.swap(i, j);
    }
    let mut chosen: Vec<u64> = idx[..k].iter().map(|&i| units[i]).collect();
    chosen.sort_unstable();
    chosen
}

fn sampled(
    modulus: &SquarefreeModulus,
    count: u64,
    seed: u64,
    report: &mut LocalCheckReport,
) -> Result<()> {
    let units = modulus.units();
    let s_min = threshold_exceeding_sum(modulus);
    let sampler = CardinalitySampler::new(modulus.phi(), s_min)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (ka, kb) = sampler.draw(&mut rng);
        let a_elems = random_subset(&units, ka, &mut rng);
        let b_elems = random_subset(&units, kb, &mut rng);
        let a = ResidueSet::from_elements(modulus, a_elems.iter().copied(), true)?;
        let b = ResidueSet::from_elements(modulus, b_elems.iter().copied(), true)?;
        report.pairs_checked += 1;
        if !sumset(&a, &b)?.is_all_of_zm() {
            report.violations.push(PairWitness {
                a: a_elems,
                b: b_elems,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{sharp_construction, SharpConstructionParams};

    fn modulus(m: u64) -> SquarefreeModulus {
        SquarefreeModulus::new(m).unwrap()
    }

    #[test]
    fn exhaustive_m15_no_violations_and_sharp_witness() {
        let md = modulus(15);
        let report = verify_local_theorem(&md, VerifyMode::Exhaustive, true).unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.threshold_numerator, 13);
        assert_eq!(report.threshold_denominator, 1);
        assert!(!report.sharp_witnesses.is_empty());

        // the construction output must appear among the witnesses
        let params = SharpConstructionParams::new(md, 2, 3).unwrap();
        let (a, b) = sharp_construction(&params);
        let expect = PairWitness {
            a: a.elements(),
            b: b.elements(),
        };
        assert!(report.sharp_witnesses.contains(&expect));
    }

    #[test]
    fn exhaustive_small_moduli_clean() {
        for m in [1u64, 3, 5, 7, 11] {
            let report = verify_local_theorem(&modulus(m), VerifyMode::Exhaustive, false).unwrap();
            assert!(report.violations.is_empty(), "m = {m}");
            assert!(report.pairs_checked > 0, "m = {m}");
        }
    }

    #[test]
    fn exhaustive_refused_beyond_cap() {
        // phi(33) = 20 > 10
        let err = verify_local_theorem(&modulus(33), VerifyMode::Exhaustive, false);
        assert!(matches!(
            err,
            Err(Error::ExhaustiveInfeasible { phi: 20, .. })
        ));
    }

    #[test]
    fn sampler_respects_conditioning() {
        let sampler = CardinalitySampler::new(48, 82).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let (ka, kb) = sampler.draw(&mut rng);
            assert!(ka + kb >= 82);
            assert!(ka <= 48 && kb <= 48);
        }
    }

    #[test]
    fn sampler_matches_exact_cell_probabilities() {
        // phi = 8, s_min = 14: qualifying cardinality cells and their
        // subset-pair counts C(8,ka) * C(8,kb), 137 pairs in total
        let cells = [
            ((6u64, 8u64), 28u64),
            ((7, 7), 64),
            ((7, 8), 8),
            ((8, 6), 28),
            ((8, 7), 8),
            ((8, 8), 1),
        ];
        let sampler = CardinalitySampler::new(8, 14).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let draws = 137_000usize;
        let mut counts = std::collections::BTreeMap::new();
        for _ in 0..draws {
            *counts.entry(sampler.draw(&mut rng)).or_insert(0u64) += 1;
        }
        assert_eq!(counts.len(), cells.len());
        for ((cell, weight), _) in cells.iter().zip(0..) {
            let got = counts[cell] as f64;
            let expect = *weight as f64 * draws as f64 / 137.0;
            // 5 sigma of a binomial with p = weight/137
            let sigma = (expect * (1.0 - *weight as f64 / 137.0)).sqrt();
            assert!(
                (got - expect).abs() <= 5.0 * sigma.max(1.0),
                "cell {cell:?}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn sampled_m105_small_run_clean_and_deterministic() {
        let md = modulus(105);
        let mode = VerifyMode::Sampled {
            count: 2_000,
            seed: 42,
        };
        let r1 = verify_local_theorem(&md, mode, false).unwrap();
        assert!(r1.violations.is_empty());
        assert_eq!(r1.pairs_checked, 2_000);
        let r2 = verify_local_theorem(&md, mode, false).unwrap();
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
    }

    #[test]
    fn sampled_m1155_large_phi_path() {
        // phi = 480: binomial weights far beyond u128, threshold 825
        let md = modulus(1155);
        let report = verify_local_theorem(
            &md,
            VerifyMode::Sampled {
                count: 300,
                seed: 11,
            },
            false,
        )
        .unwrap();
        assert_eq!(report.threshold_numerator, 825);
        assert_eq!(report.pairs_checked, 300);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn random_subset_sizes_and_bounds() {
        let units: Vec<u64> = (0..48).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in [0u64, 1, 24, 47, 48] {
            let s = random_subset(&units, k, &mut rng);
            assert_eq!(s.len(), k as usize);
            let mut dedup = s.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), s.len());
        }
    }
}
