//! The spectral toolbox on a worked input: normalized transform, Parseval,
//! convolution identity, large spectrum, Bohr set, and the smoothing
//! approximant, all at a deliberately awkward group order.
//!
//! Run: `cargo run --release -p goldbach-density --example spectral_toolkit`

use goldbach_density::bohr::smoothing_multiplier;
use goldbach_density::{approximant, bohr_set, convolve, dft, large_spectrum, CyclicFunction};

fn main() -> goldbach_density::Result<()> {
    let n = 10_007usize; // prime, so nothing factors conveniently
    let tau = 2.0 * std::f64::consts::PI / n as f64;
    let f = CyclicFunction::new(
        (0..n)
            .map(|i| 1.0 + 0.6 * (tau * i as f64).cos() + 0.25 * (3.0 * tau * i as f64).sin())
            .collect(),
    )?;

    let s = dft(&f);
    let physical: f64 = f.values().iter().map(|v| v * v).sum::<f64>() / n as f64;
    let spectral: f64 = s.coeffs().iter().map(|c| c.norm_sqr()).sum();
    println!("N = {n}");
    println!("Parseval: E|f|^2 = {physical:.12}, sum |f_hat|^2 = {spectral:.12}");

    let conv = convolve(&f, &f)?;
    let conv_hat = dft(&conv);
    let max_err = (0..n)
        .map(|r| (conv_hat.coeff(r) - s.coeff(r) * s.coeff(r)).norm())
        .fold(0.0f64, f64::max)
        / s.lp_norm(f64::INFINITY)?.powi(2);
    println!("convolution identity max relative error: {max_err:.3e}");

    let eps = 0.1;
    let spectrum = large_spectrum(&f, eps)?;
    println!("large spectrum at eps = {eps}: {:?}", spectrum.members());

    let b = bohr_set(n, &spectrum, eps)?;
    println!(
        "Bohr set: |B| = {} ({:.4} of Z_N), radius {eps}",
        b.len(),
        b.density()
    );

    let mult = smoothing_multiplier(&b)?;
    let inside_01 = mult.iter().all(|&m| (0.0..=1.0).contains(&m));
    println!("smoothing multiplier in [0,1] at every frequency: {inside_01}");

    let g = approximant(&f, &b)?;
    let g_hat = dft(&g);
    let distance = (0..n)
        .map(|r| (s.coeff(r) - g_hat.coeff(r)).norm())
        .fold(0.0f64, f64::max);
    println!("mean(f) = {:.12}, mean(g) = {:.12}", f.mean(), g.mean());
    println!(
        "||f_hat - g_hat||_inf = {distance:.6} (bound 4 eps = {})",
        4.0 * eps
    );
    Ok(())
}
