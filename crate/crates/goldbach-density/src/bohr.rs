//! Large spectra, Bohr sets, and the smoothing approximant.
//!
//! The approximant of f over a Bohr set B is
//!     g(n) = E_{b1, b2 in B} f(n + b1 - b2),
//! computed spectrally: g_hat(r) = f_hat(r) * |E_{b in B} e_N(rb)|^2.
//! The multiplier lies in [0, 1] and equals 1 at r = 0, so g keeps the
//! mean of f and never enlarges a Fourier coefficient.

use crate::error::{Error, Result};
use crate::fourier::{dft, idft, CyclicFunction, Spectrum};
use rustfft::num_complex::Complex64;

/// Tolerance for boundary ties in the large spectrum: coefficients within
/// this distance of the cutoff count as >= cutoff.
pub const SPECTRUM_TIE_TOLERANCE: f64 = 1e-12;

/// A set of frequencies in Z_N, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrequencySet {
    n: usize,
    members: Vec<u64>,
}

impl FrequencySet {
    pub fn new(n: usize, mut members: Vec<u64>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&r) = members.iter().find(|&&r| r >= n as u64) {
            return Err(Error::OutOfRange {
                what: "frequency",
                value: r as i64,
                lo: 0,
                hi: n as i64 - 1,
            });
        }
        Ok(FrequencySet { n, members })
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Frequencies where |f_hat(r)| >= eps (boundary inclusive).
pub fn large_spectrum(f: &CyclicFunction, eps: f64) -> Result<FrequencySet> {
    let valid = eps > 0.0;
    if !valid {
        return Err(Error::InvalidParameter(format!(
            "large spectrum cutoff eps = {eps} must be positive"
        )));
    }
    let s = dft(f);
    large_spectrum_of(&s, eps)
}

/// Same, from an already computed spectrum.
pub fn large_spectrum_of(s: &Spectrum, eps: f64) -> Result<FrequencySet> {
    let valid = eps > 0.0;
    if !valid {
        return Err(Error::InvalidParameter(format!(
            "large spectrum cutoff eps = {eps} must be positive"
        )));
    }
    let members = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() >= eps - SPECTRUM_TIE_TOLERANCE)
        .map(|(r, _)| r as u64)
        .collect();
    FrequencySet::new(s.len(), members)
}

/// B = {x in Z_N : |e_N(xr) - 1| <= eps for each r in R}, with
/// |e_N(xr) - 1| evaluated exactly as 2|sin(pi x r / N)|.
#[derive(Clone, Debug)]
pub struct BohrSet {
    n: usize,
    frequencies: FrequencySet,
    radius: f64,
    members: Vec<u64>,
}

impl BohrSet {
    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn frequencies(&self) -> &FrequencySet {
        &self.frequencies
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn density(&self) -> f64 {
        self.members.len() as f64 / self.n as f64
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

#[inline]
fn phase_distance(x: u64, r: u64, n: usize) -> f64 {
    // |e_N(xr) - 1| = 2 |sin(pi * xr / N)|; reduce xr mod N first so the
    // sine argument stays small and exact
    let k = ((x as u128 * r as u128) % n as u128) as f64;
    2.0 * (std::f64::consts::PI * k / n as f64).sin().abs()
}

pub fn bohr_set(n: usize, frequencies: &FrequencySet, eps: f64) -> Result<BohrSet> {
    let valid = eps > 0.0;
    if !valid {
        return Err(Error::InvalidParameter(format!(
            "Bohr radius eps = {eps} must be positive"
        )));
    }
    if frequencies.group_order() != n {
        return Err(Error::LengthMismatch(frequencies.group_order(), n));
    }
    let members: Vec<u64> = (0..n as u64)
        .filter(|&x| {
            frequencies
                .members()
                .iter()
                .all(|&r| phase_distance(x, r, n) <= eps)
        })
        .collect();
    Ok(BohrSet {
        n,
        frequencies: frequencies.clone(),
        radius: eps,
        members,
    })
}

/// |E_{b in B} e_N(rb)|^2 for every r, computed from the transform of the
/// indicator of B. Exactly 1 at r = 0; clamped to [0, 1] where rounding
/// would exceed the triangle-inequality bound.
pub fn smoothing_multiplier(b: &BohrSet) -> Result<Vec<f64>> {
    if b.is_empty() {
        return Err(Error::EmptyBohrSet);
    }
    let n = b.group_order();
    let ind = CyclicFunction::indicator(n, b.members().iter().map(|&x| x as usize))?;
    let s = dft(&ind);
    let card = b.len() as f64;
    let scale = (n as f64 / card) * (n as f64 / card);
    let mut mult: Vec<f64> = s
        .coeffs()
        .iter()
        .map(|c| (c.norm_sqr() * scale).min(1.0))
        .collect();
    mult[0] = 1.0;
    Ok(mult)
}

/// g(n) = E_{b1, b2 in B} f(n + b1 - b2), computed spectrally.
///
/// For nonnegative f the exact g is an average of values of f, so any
/// negative output is round-trip dust; it is zeroed below a tolerance
/// tied to the scale of f.
pub fn approximant(f: &CyclicFunction, b: &BohrSet) -> Result<CyclicFunction> {
    if f.len() != b.group_order() {
        return Err(Error::LengthMismatch(f.len(), b.group_order()));
    }
    let mult = smoothing_multiplier(b)?;
    let s = dft(f);
    let coeffs: Vec<Complex64> = s.coeffs().iter().zip(&mult).map(|(c, &m)| c * m).collect();
    let mut g = idft(&Spectrum::from_coeffs(coeffs)?);
    if f.is_nonnegative() {
        let dust = 1e-12 * f.sup_norm();
        g.zero_negative_dust(dust);
    }
    Ok(g)
}

/// Spectrum of the approximant without synthesizing it: f_hat * multiplier
/// termwise, so |g_hat(r)| <= |f_hat(r)| holds exactly in floating point.
pub fn approximant_spectrum(f_hat: &Spectrum, mult: &[f64]) -> Result<Spectrum> {
    if f_hat.len() != mult.len() {
        return Err(Error::LengthMismatch(f_hat.len(), mult.len()));
    }
    Spectrum::from_coeffs(
        f_hat
            .coeffs()
            .iter()
            .zip(mult)
            .map(|(c, &m)| c * m)
            .collect(),
    )
}
