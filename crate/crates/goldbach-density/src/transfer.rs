//! The transference pipeline over Z_N: hypothesis measurement, the
//! large-spectrum/Bohr-set decomposition f = g + h, the pointwise
//! convolution floor for the bounded parts, and the exceptional set of
//! f1 * f2.
//!
//! The two conclusion thresholds delta^3/1000 (exceptional-set floor) and
//! delta^3/200 (pointwise floor for the bounded parts) are fixed, not
//! tunable. The small-constant budget c is a dial, carried in every report.

use crate::bohr::{approximant_spectrum, bohr_set, large_spectrum_of, smoothing_multiplier};
use crate::error::{Error, Result};
use crate::fourier::{convolve, dft, idft, CyclicFunction, Spectrum};
use crate::report::SummarizedList;
use serde::{Deserialize, Serialize};

pub const DEFAULT_C: f64 = 1e-2;

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct TransferenceParams {
    /// Mean surplus: requires delta1 + delta2 >= 1 + delta.
    pub delta: f64,
    /// Allowed exceptional density.
    pub eta: f64,
    /// Mean-value exponent, strictly inside (2, 4).
    pub p: f64,
    /// Mean-value bound M >= 1 on ||f_hat||_p.
    pub mean_value_bound: f64,
    /// Small-constant dial; also the Fourier-decay budget for majorants.
    pub c: f64,
    /// Spectral cutoff for the decomposition.
    pub eps: f64,
}

impl TransferenceParams {
    /// eps from the default schedule (c * delta^6 * eta)^(2/(4-p)).
    pub fn new(delta: f64, eta: f64, p: f64, mean_value_bound: f64, c: f64) -> Result<Self> {
        let eps = (c * delta.powi(6) * eta).powf(2.0 / (4.0 - p));
        Self::with_eps(delta, eta, p, mean_value_bound, c, eps)
    }

    pub fn with_eps(
        delta: f64,
        eta: f64,
        p: f64,
        mean_value_bound: f64,
        c: f64,
        eps: f64,
    ) -> Result<Self> {
        fn bad(what: &str, v: f64) -> Error {
            Error::InvalidParameter(format!("{what} = {v} out of range"))
        }
        let checks = [
            ("delta", delta, delta > 0.0 && delta < 1.0),
            ("eta", eta, eta > 0.0 && eta < 1.0),
            ("p", p, p > 2.0 && p < 4.0),
            (
                "mean_value_bound",
                mean_value_bound,
                mean_value_bound >= 1.0,
            ),
            ("c", c, c > 0.0),
            ("eps", eps, eps > 0.0),
        ];
        for (what, v, ok) in checks {
            if !ok {
                return Err(bad(what, v));
            }
        }
        Ok(TransferenceParams {
            delta,
            eta,
            p,
            mean_value_bound,
            c,
            eps,
        })
    }

    /// Exceptional-set threshold delta^3 / 1000.
    pub fn conclusion_floor(&self) -> f64 {
        self.delta.powi(3) / 1000.0
    }

    /// Pointwise floor delta^3 / 200 for the bounded parts.
    pub fn pointwise_floor(&self) -> f64 {
        self.delta.powi(3) / 200.0
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub n: usize,
    pub delta1: f64,
    pub delta2: f64,
    /// Condition (1): delta1 + delta2 >= 1 + delta.
    pub mean_sum_required: f64,
    pub mean_condition: bool,
    /// Condition (2): ||f_hat_i||_p <= M.
    pub mv1: f64,
    pub mv2: f64,
    pub mv_bound: f64,
    pub mv_condition: bool,
    /// Condition (3): ||nu_hat_i - 1||_inf <= c.
    pub decay1: f64,
    pub decay2: f64,
    pub decay_budget: f64,
    pub decay_condition: bool,
    /// Points where f_i > nu_i (must be empty).
    pub majorization_violations: SummarizedList,
    pub majorized: bool,
    pub all_pass: bool,
}

/// Measures every hypothesis and reports pass/fail per condition.
pub fn check_hypotheses(
    f1: &CyclicFunction,
    f2: &CyclicFunction,
    nu1: &CyclicFunction,
    nu2: &CyclicFunction,
    params: &TransferenceParams,
) -> Result<HypothesisReport> {
    let n = f1.len();
    for other in [f2.len(), nu1.len(), nu2.len()] {
        if other != n {
            return Err(Error::LengthMismatch(n, other));
        }
    }
    for (name, f) in [("f1", f1), ("f2", f2), ("nu1", nu1), ("nu2", nu2)] {
        if !f.is_nonnegative() {
            return Err(Error::InvalidParameter(format!(
                "{name} has negative values"
            )));
        }
    }

    let mut violations: Vec<u64> = Vec::new();
    for (f, nu) in [(f1, nu1), (f2, nu2)] {
        for i in 0..n {
            if f.value(i) > nu.value(i) {
                violations.push(i as u64);
            }
        }
    }
    violations.sort_unstable();
    violations.dedup();
    let majorized = violations.is_empty();

    let delta1 = f1.mean();
    let delta2 = f2.mean();
    let mean_sum_required = 1.0 + params.delta;
    let mean_condition = delta1 + delta2 >= mean_sum_required;

    let mv1 = dft(f1).lp_norm(params.p)?;
    let mv2 = dft(f2).lp_norm(params.p)?;
    let mv_condition = mv1 <= params.mean_value_bound && mv2 <= params.mean_value_bound;

    let decay1 = dft(nu1).decay_from_one();
    let decay2 = dft(nu2).decay_from_one();
    let decay_condition = decay1 <= params.c && decay2 <= params.c;

    Ok(HypothesisReport {
        n,
        delta1,
        delta2,
        mean_sum_required,
        mean_condition,
        mv1,
        mv2,
        mv_bound: params.mean_value_bound,
        mv_condition,
        decay1,
        decay2,
        decay_budget: params.c,
        decay_condition,
        majorization_violations: SummarizedList::from_items(violations),
        majorized,
        all_pass: mean_condition && mv_condition && decay_condition && majorized,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionDiagnostics {
    pub eps: f64,
    pub spectrum_size: usize,
    pub bohr_cardinality: usize,
    pub bohr_density: f64,
    pub mean_f: f64,
    pub mean_g: f64,
    pub mean_preserved: bool,
    pub sup_g: f64,
    /// ||f_hat - g_hat||_inf from the synthesis multiplier.
    pub fg_spectral_distance: f64,
    pub fg_distance_bound: f64,
    pub within_distance_bound: bool,
    pub f_norm_p: f64,
    pub g_norm_p: f64,
    pub norm_non_expansive: bool,
}

/// The decomposition f = g + h with its measured certificates.
pub struct Decomposition {
    pub g: CyclicFunction,
    pub h: CyclicFunction,
    /// Spectrum of g on the synthesis route (f_hat * multiplier termwise).
    pub g_spectrum: Spectrum,
    pub f_spectrum: Spectrum,
    pub diagnostics: DecompositionDiagnostics,
}

/// Splits f into the Bohr-smoothed part g and the uniform remainder h,
/// using the large spectrum of f at the params cutoff.
pub fn decompose(f: &CyclicFunction, params: &TransferenceParams) -> Result<Decomposition> {
    let n = f.len();
    let eps = params.eps;
    let f_hat = dft(f);
    let spectrum = large_spectrum_of(&f_hat, eps)?;
    let b = bohr_set(n, &spectrum, eps)?;
    let mult = smoothing_multiplier(&b)?;
    let g_hat = approximant_spectrum(&f_hat, &mult)?;
    let mut g = idft(&g_hat);
    if f.is_nonnegative() {
        // the exact g averages values of f; negative output is rounding dust
        g.zero_negative_dust(1e-12 * f.sup_norm());
    }
    let h = f.sub(&g)?;

    let fg_spectral_distance = f_hat
        .coeffs()
        .iter()
        .zip(&mult)
        .fold(0.0f64, |acc, (c, &m)| acc.max(c.norm() * (1.0 - m)));
    let mean_f = f.mean();
    let mean_g = g.mean();
    let f_norm_p = f_hat.lp_norm(params.p)?;
    let g_norm_p = g_hat.lp_norm(params.p)?;
    let diagnostics = DecompositionDiagnostics {
        eps,
        spectrum_size: spectrum.len(),
        bohr_cardinality: b.len(),
        bohr_density: b.density(),
        mean_f,
        mean_g,
        mean_preserved: (mean_f - mean_g).abs() <= 1e-12 * f.sup_norm().max(1.0),
        sup_g: g.max_value(),
        fg_spectral_distance,
        fg_distance_bound: 4.0 * eps,
        within_distance_bound: fg_spectral_distance <= 4.0 * eps,
        f_norm_p,
        g_norm_p,
        norm_non_expansive: g_norm_p <= f_norm_p,
    };
    Ok(Decomposition {
        g,
        h,
        g_spectrum: g_hat,
        f_spectrum: f_hat,
        diagnostics,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LowerBoundReport {
    /// Violated preconditions, reported rather than silently ignored.
    pub precondition_violations: Vec<String>,
    pub preconditions_ok: bool,
    pub min_convolution: f64,
    pub floor: f64,
    pub meets_floor: bool,
    /// Essential supports A_i = {n : g_i(n) >= delta/10} as fractions of N,
    /// against the proof's bound (delta_i - delta/5).
    pub support1_fraction: f64,
    pub support2_fraction: f64,
    pub support1_bound: f64,
    pub support2_bound: f64,
}

/// Checks the pointwise floor g1 * g2 >= delta^3 / 200.
pub fn lower_bound_check(
    g1: &CyclicFunction,
    g2: &CyclicFunction,
    params: &TransferenceParams,
) -> Result<LowerBoundReport> {
    if g1.len() != g2.len() {
        return Err(Error::LengthMismatch(g1.len(), g2.len()));
    }
    let n = g1.len() as f64;
    let delta = params.delta;
    let sup_cap = 1.0 + delta / 10.0;
    let mut violations = Vec::new();
    for (name, g) in [("g1", g1), ("g2", g2)] {
        if !g.is_nonnegative() {
            violations.push(format!("{name} has negative values"));
        }
        let sup = g.max_value();
        if sup > sup_cap {
            violations.push(format!(
                "sup {name} = {sup} exceeds 1 + delta/10 = {sup_cap}"
            ));
        }
    }
    let mean_sum = g1.mean() + g2.mean();
    if mean_sum < 1.0 + delta {
        violations.push(format!(
            "mean sum {mean_sum} below 1 + delta = {}",
            1.0 + delta
        ));
    }

    let conv = convolve(g1, g2)?;
    let min_convolution = conv.min_value();
    let floor = params.pointwise_floor();

    let support_fraction =
        |g: &CyclicFunction| g.values().iter().filter(|&&v| v >= delta / 10.0).count() as f64 / n;
    Ok(LowerBoundReport {
        preconditions_ok: violations.is_empty(),
        precondition_violations: violations,
        min_convolution,
        floor,
        meets_floor: min_convolution >= floor,
        support1_fraction: support_fraction(g1),
        support2_fraction: support_fraction(g2),
        support1_bound: g1.mean() - delta / 5.0,
        support2_bound: g2.mean() - delta / 5.0,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransferenceReport {
    pub n: usize,
    pub params: TransferenceParams,
    pub forced: bool,
    pub hypotheses: HypothesisReport,
    pub delta1: f64,
    pub delta2: f64,
    pub decay1: f64,
    pub decay2: f64,
    pub mv1: f64,
    pub mv2: f64,
    pub decomposition1: DecompositionDiagnostics,
    pub decomposition2: DecompositionDiagnostics,
    pub lower_bound: LowerBoundReport,
    /// max_r |g1_hat(r) g2_hat(r) - f1_hat(r) f2_hat(r)|.
    pub product_spectral_distance: f64,
    pub conclusion_floor: f64,
    pub min_convolution: f64,
    /// Minimum of f1 * f2 off the exceptional set (absent if E covers Z_N).
    pub min_outside: Option<f64>,
    pub exceptional: SummarizedList,
    pub alpha: f64,
    #[serde(skip)]
    pub exceptional_full: Vec<u64>,
}

/// Runs the full pipeline. With `force`, hypothesis failures do not stop
/// the run (the override is recorded); the conclusion alpha <= eta is only
/// asserted when the hypotheses actually passed.
pub fn run_transference(
    f1: &CyclicFunction,
    f2: &CyclicFunction,
    nu1: &CyclicFunction,
    nu2: &CyclicFunction,
    params: &TransferenceParams,
    force: bool,
) -> Result<TransferenceReport> {
    let hypotheses = check_hypotheses(f1, f2, nu1, nu2, params)?;
    if !hypotheses.all_pass && !force {
        return Err(Error::HypothesesFailed(summarize_failures(&hypotheses)));
    }

    let d1 = decompose(f1, params)?;
    let d2 = decompose(f2, params)?;
    let lower_bound = lower_bound_check(&d1.g, &d2.g, params)?;

    let product_spectral_distance = d1
        .g_spectrum
        .coeffs()
        .iter()
        .zip(d2.g_spectrum.coeffs())
        .zip(d1.f_spectrum.coeffs().iter().zip(d2.f_spectrum.coeffs()))
        .fold(0.0f64, |acc, ((g1c, g2c), (f1c, f2c))| {
            acc.max((g1c * g2c - f1c * f2c).norm())
        });

    let conv = convolve(f1, f2)?;
    let floor = params.conclusion_floor();
    let n = conv.len();
    let mut exceptional: Vec<u64> = Vec::new();
    let mut min_convolution = f64::INFINITY;
    let mut min_outside = f64::INFINITY;
    for i in 0..n {
        let v = conv.value(i);
        min_convolution = min_convolution.min(v);
        if v <= floor {
            exceptional.push(i as u64);
        } else {
            min_outside = min_outside.min(v);
        }
    }
    let alpha = exceptional.len() as f64 / n as f64;
    if hypotheses.all_pass && alpha > params.eta {
        return Err(Error::TransferenceViolation {
            alpha,
            eta: params.eta,
        });
    }

    Ok(TransferenceReport {
        n,
        params: *params,
        forced: force && !hypotheses.all_pass,
        delta1: hypotheses.delta1,
        delta2: hypotheses.delta2,
        decay1: hypotheses.decay1,
        decay2: hypotheses.decay2,
        mv1: hypotheses.mv1,
        mv2: hypotheses.mv2,
        hypotheses,
        decomposition1: d1.diagnostics,
        decomposition2: d2.diagnostics,
        lower_bound,
        product_spectral_distance,
        conclusion_floor: floor,
        min_convolution,
        min_outside: if min_outside.is_finite() {
            Some(min_outside)
        } else {
            None
        },
        exceptional: SummarizedList::from_items(exceptional.clone()),
        alpha,
        exceptional_full: exceptional,
    })
}

fn summarize_failures(h: &HypothesisReport) -> String {
    let mut parts = Vec::new();
    if !h.mean_condition {
        parts.push(format!(
            "mean sum {:.6} < {:.6}",
            h.delta1 + h.delta2,
            h.mean_sum_required
        ));
    }
    if !h.mv_condition {
        parts.push(format!(
            "mean-value norms ({:.6}, {:.6}) exceed {:.6}",
            h.mv1, h.mv2, h.mv_bound
        ));
    }
    if !h.decay_condition {
        parts.push(format!(
            "Fourier decay ({:.6}, {:.6}) exceeds budget {:.6}",
            h.decay1, h.decay2, h.decay_budget
        ));
    }
    if !h.majorized {
        parts.push(format!(
            "majorization fails at {} points",
            h.majorization_violations.count
        ));
    }
    parts.join("; ")
}

/// Interval indicator on [0, ceil(frac * N)), the synthetic test family.
pub fn interval_indicator(n: usize, frac: f64) -> Result<CyclicFunction> {
    if !(0.0..=1.0).contains(&frac) {
        return Err(Error::InvalidParameter(format!(
            "interval fraction {frac} outside [0, 1]"
        )));
    }
    let len = ((frac * n as f64).ceil() as usize).min(n);
    CyclicFunction::indicator(n, 0..len)
}
