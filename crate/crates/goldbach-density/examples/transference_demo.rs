//! Runs the transference pipeline twice: a synthetic interval pair where
//! every hypothesis holds and the exceptional set is empty, and real
//! W-tricked prime weights (forced past the finite-scale decay budget)
//! where the conclusion still comes out clean.
//!
//! Run: `cargo run --release -p goldbach-density --example transference_demo`

use goldbach_density::experiments::{
    build_transfer_inputs, SubsetSpec, TransferDemoConfig, TransferFamily,
};
use goldbach_density::run_transference;

fn print_report(tag: &str, r: &goldbach_density::TransferenceReport) {
    println!("[{tag}] N = {}", r.n);
    println!(
        "  means: delta1 = {:.4}, delta2 = {:.4}",
        r.delta1, r.delta2
    );
    println!(
        "  decay: {:.4} / {:.4} (budget {:.4})",
        r.decay1, r.decay2, r.hypotheses.decay_budget
    );
    println!("  ||f_hat||_p: {:.4} / {:.4}", r.mv1, r.mv2);
    println!(
        "  hypotheses pass: {}, forced: {}",
        r.hypotheses.all_pass, r.forced
    );
    println!(
        "  |B|/N: {:.4} / {:.4}",
        r.decomposition1.bohr_density, r.decomposition2.bohr_density
    );
    println!(
        "  sup g: {:.4} / {:.4}",
        r.decomposition1.sup_g, r.decomposition2.sup_g
    );
    println!(
        "  min g1*g2 = {:.6} (floor delta^3/200 = {:.6})",
        r.lower_bound.min_convolution, r.lower_bound.floor
    );
    println!(
        "  min f1*f2 = {:.6} (floor delta^3/1000 = {:.6})",
        r.min_convolution, r.conclusion_floor
    );
    println!(
        "  exceptional: {} of {} (alpha = {:.6}, eta = {})",
        r.exceptional.count, r.n, r.alpha, r.params.eta
    );
    println!();
}

fn main() -> goldbach_density::Result<()> {
    let synthetic = TransferDemoConfig {
        family: TransferFamily::Synthetic {
            n: 10_007,
            delta1: 0.8,
            delta2: 0.8,
        },
        delta: 0.5,
        eta: 0.1,
        p: 3.0,
        mean_value_bound: 2.0,
        c: 0.01,
        eps: None,
        force: false,
        dump_functions: None,
        sidecar: None,
    };
    let params = synthetic.params()?;
    let (f1, f2, nu1, nu2) = build_transfer_inputs(&synthetic)?;
    let report = run_transference(&f1, &f2, &nu1, &nu2, &params, false)?;
    print_report("synthetic intervals", &report);

    let primes = TransferDemoConfig {
        family: TransferFamily::PrimeWeights {
            w: 2,
            b1: 1,
            b2: 1,
            big_m: 200_000,
            subset: SubsetSpec::All,
        },
        ..synthetic
    };
    let params = primes.params()?;
    let (f1, f2, nu1, nu2) = build_transfer_inputs(&primes)?;
    // at fixed W = 2 the measured Fourier decay of nu sits near 1/2 (the
    // mod-3 bias), far above any small budget, so the run must be forced
    let report = run_transference(&f1, &f2, &nu1, &nu2, &params, true)?;
    print_report("prime weights, W = 2, M = 2e5", &report);

    assert_eq!(report.exceptional.count, 0);
    println!("no exceptional residues: every class lifts to a prime pair sum");
    Ok(())
}
