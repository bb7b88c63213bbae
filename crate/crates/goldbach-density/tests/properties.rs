//! Property tests for the structural invariants: sumset algebra, spectral
//! identities at random sizes, Bohr set nesting, weight majorization, and
//! container round trips.

mod common;

use common::{convolve_direct, dft_direct};
use goldbach_density::transfer::{run_transference, TransferenceParams};
use goldbach_density::{
    bohr_set, convolve, dft, goldbach_threshold, majorant, reduced_residues, sieve, sumset,
    unit_shift_count, weighted_subset, CyclicFunction, FrequencySet, PrimeSubset, ResidueSet,
    SquarefreeModulus, WTrickContext,
};
use proptest::prelude::*;
use std::sync::Arc;

const SQUAREFREE_MODULI: &[u64] = &[3, 5, 15, 21, 33, 35, 105];

#[test]
fn operations_are_thread_safe_and_deterministic() {
    // shared immutable table, concurrent scans / transforms / verifications
    let table = Arc::new(sieve(50_000).unwrap());
    let all = Arc::new(PrimeSubset::all(table.clone()));
    let baseline_scan = goldbach_density::goldbach_scan(&all, 50_000).unwrap();
    let f = common::random_nonneg(4096, 2.0, 77);
    let baseline_dft = dft(&f);

    let handles: Vec<_> = (0..4)
        .map(|_| {
            let all = all.clone();
            let f = f.clone();
            std::thread::spawn(move || {
                let scan = goldbach_density::goldbach_scan(&all, 50_000).unwrap();
                let spec = dft(&f);
                let md = SquarefreeModulus::new(15).unwrap();
                let report = goldbach_density::verify_local_theorem(
                    &md,
                    goldbach_density::VerifyMode::Sampled {
                        count: 200,
                        seed: 5,
                    },
                    false,
                )
                .unwrap();
                (
                    scan.exceptional,
                    spec.coeffs().to_vec(),
                    report.pairs_checked,
                )
            })
        })
        .collect();
    for h in handles {
        let (exceptional, coeffs, pairs) = h.join().unwrap();
        assert_eq!(exceptional, baseline_scan.exceptional);
        assert_eq!(coeffs, baseline_dft.coeffs());
        assert_eq!(pairs, 200);
    }
}

fn subset_from_mask(md: &SquarefreeModulus, mask: u64) -> ResidueSet {
    let units = md.units();
    ResidueSet::from_elements(
        md,
        units
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 48) & 1 == 1)
            .map(|(_, &u)| u),
        true,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sumset_commutative_and_monotone(
        idx in 0usize..SQUAREFREE_MODULI.len(),
        mask_a in any::<u64>(),
        mask_b in any::<u64>(),
        extra in any::<u64>(),
    ) {
        let md = SquarefreeModulus::new(SQUAREFREE_MODULI[idx]).unwrap();
        let a = subset_from_mask(&md, mask_a);
        let b = subset_from_mask(&md, mask_b);
        let ab = sumset(&a, &b).unwrap();
        let ba = sumset(&b, &a).unwrap();
        prop_assert_eq!(ab.elements(), ba.elements());

        // enlarging A never shrinks the sumset
        let a_big = subset_from_mask(&md, mask_a | extra);
        prop_assert!(a.is_subset_of(&a_big));
        let ab_big = sumset(&a_big, &b).unwrap();
        prop_assert!(ab.is_subset_of(&ab_big));
    }

    #[test]
    fn sumset_matches_pair_enumeration(
        idx in 0usize..SQUAREFREE_MODULI.len(),
        mask_a in any::<u64>(),
        mask_b in any::<u64>(),
    ) {
        let m = SQUAREFREE_MODULI[idx];
        let md = SquarefreeModulus::new(m).unwrap();
        let a = subset_from_mask(&md, mask_a);
        let b = subset_from_mask(&md, mask_b);
        let fast = sumset(&a, &b).unwrap();
        let mut naive = std::collections::BTreeSet::new();
        for ea in a.elements() {
            for eb in b.elements() {
                naive.insert((ea + eb) % m);
            }
        }
        prop_assert_eq!(fast.elements(), naive.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn theorem_holds_on_random_above_threshold_pairs(
        idx in 0usize..SQUAREFREE_MODULI.len(),
        fill in any::<u64>(),
    ) {
        // pad a random seed set until the pair clears the threshold
        let m = SQUAREFREE_MODULI[idx];
        let md = SquarefreeModulus::new(m).unwrap();
        let units = md.units();
        let threshold = goldbach_threshold(&md);
        let all = reduced_residues(&md);
        let mut a_elems: Vec<u64> = units
            .iter()
            .enumerate()
            .filter(|(i, _)| fill >> (i % 48) & 1 == 1)
            .map(|(_, &u)| u)
            .collect();
        for &u in &units {
            let enough = num_rational::BigRational::from_integer(
                ((a_elems.len() + units.len()) as u64).into(),
            ) > threshold;
            if enough {
                break;
            }
            if !a_elems.contains(&u) {
                a_elems.push(u);
            }
        }
        let a = ResidueSet::from_elements(&md, a_elems.iter().copied(), true).unwrap();
        let sum_card = num_rational::BigRational::from_integer(
            (a.cardinality() + all.cardinality()).into(),
        );
        prop_assume!(sum_card > threshold);
        let s = sumset(&a, &all).unwrap();
        prop_assert!(s.is_all_of_zm(), "m = {}, |A| = {}", m, a.cardinality());
    }

    #[test]
    fn unit_shift_count_meets_product_bound(
        idx in 0usize..SQUAREFREE_MODULI.len(),
        n in any::<u64>(),
    ) {
        let m = SQUAREFREE_MODULI[idx];
        let md = SquarefreeModulus::new(m).unwrap();
        let bound: u64 = md.primes().iter().map(|p| p - 2).product();
        prop_assert!(unit_shift_count(&md, n % m) >= bound);
    }

    #[test]
    fn parseval_and_oracle_at_random_sizes(
        n in 1usize..200,
        seed in any::<u64>(),
    ) {
        let f = common::random_nonneg(n, 2.0, seed);
        let s = dft(&f);
        let physical: f64 = f.values().iter().map(|v| v * v).sum::<f64>() / n as f64;
        let spectral: f64 = s.coeffs().iter().map(|c| c.norm_sqr()).sum();
        prop_assert!((physical - spectral).abs() <= 1e-9 * f.sup_norm().max(1.0).powi(2));

        let direct = dft_direct(&f);
        for (r, d) in direct.iter().enumerate() {
            prop_assert!((s.coeff(r) - d).norm() <= 1e-9);
        }
    }

    #[test]
    fn convolution_theorem_small_sizes(
        n in 1usize..64,
        seed in any::<u64>(),
    ) {
        let f = common::random_nonneg(n, 1.0, seed);
        let g = common::random_nonneg(n, 1.0, seed ^ 0xabcdef);
        let fast = convolve(&f, &g).unwrap();
        let direct = convolve_direct(&f, &g);
        for (i, d) in direct.iter().enumerate() {
            prop_assert!((fast.value(i) - d).abs() <= 1e-9);
        }
    }

    #[test]
    fn bohr_sets_nest(
        n in 2usize..160,
        r1 in any::<u64>(),
        r2 in any::<u64>(),
        eps_small in 0.01f64..0.5,
        grow in 1.01f64..4.0,
    ) {
        let freqs = FrequencySet::new(n, vec![r1 % n as u64, r2 % n as u64]).unwrap();
        let small = bohr_set(n, &freqs, eps_small).unwrap();
        let large = bohr_set(n, &freqs, eps_small * grow).unwrap();
        for &x in small.members() {
            prop_assert!(large.contains(x));
        }
        // fewer frequency constraints only enlarge the set
        let fewer = FrequencySet::new(n, vec![r1 % n as u64]).unwrap();
        let relaxed = bohr_set(n, &fewer, eps_small).unwrap();
        for &x in small.members() {
            prop_assert!(relaxed.contains(x));
        }
        prop_assert!(small.contains(0));
    }

    #[test]
    fn weighted_subset_below_majorant(
        w_idx in 0usize..3,
        cap in 0.5f64..1.0,
        seed in any::<u64>(),
    ) {
        let w = [2u64, 6, 30][w_idx];
        let b = if w == 6 { 5 } else { 1 };
        let ctx = WTrickContext::new(w, b, w * 400, cap).unwrap();
        let table = Arc::new(sieve(ctx.max_lift()).unwrap());
        let nu = majorant(&ctx, &table).unwrap();
        let sub = PrimeSubset::filtered(table, |p| p.wrapping_mul(seed | 1) % 3 != 0);
        let f = weighted_subset(&ctx, &sub).unwrap();
        for i in 0..ctx.n() {
            prop_assert!(f.value(i) <= nu.value(i));
        }
    }

    #[test]
    fn function_container_round_trip(values in prop::collection::vec(0.0f64..100.0, 1..80)) {
        let dir = std::env::temp_dir().join("goldbach-prop-io");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("f-{}.zfn", values.len()));
        let f = CyclicFunction::new(values).unwrap();
        goldbach_density::io::write_function(&path, &f).unwrap();
        let back = goldbach_density::io::read_function(&path).unwrap();
        prop_assert_eq!(f.values(), back.values());
    }

    #[test]
    fn exceptional_set_independent_of_eta(
        frac1 in 0.1f64..0.45,
        frac2 in 0.1f64..0.45,
    ) {
        // E depends only on f1*f2; eta never changes it
        let n = 257usize;
        let f1 = goldbach_density::transfer::interval_indicator(n, frac1).unwrap();
        let f2 = goldbach_density::transfer::interval_indicator(n, frac2).unwrap();
        let one = CyclicFunction::constant(n, 1.0).unwrap();
        let pa = TransferenceParams::new(0.4, 0.05, 3.0, 2.0, 0.01).unwrap();
        let pb = TransferenceParams::new(0.4, 0.9, 3.0, 2.0, 0.01).unwrap();
        let ra = run_transference(&f1, &f2, &one, &one, &pa, true).unwrap();
        let rb = run_transference(&f1, &f2, &one, &one, &pb, true).unwrap();
        prop_assert_eq!(ra.exceptional_full, rb.exceptional_full);
    }
}
