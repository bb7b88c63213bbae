//! Normalized Fourier analysis on Z_N: expectation normalization on the
//! physical side, counting measure on the frequency side.
//!
//!   f_hat(r) = E_{n in Z_N} f(n) e_N(-rn),    e_N(x) = exp(2 pi i x / N)
//!
//! The fast path uses an O(N log N) transform valid for every N (mixed
//! radix with Bluestein fallback for large prime factors, via rustfft).

use crate::error::{Error, Result};
use rustfft::{num_complex::Complex64, FftPlanner};
use std::cell::RefCell;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn fft_forward(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(buf.len()).process(buf));
}

fn fft_inverse(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(buf.len()).process(buf));
}

/// A real-valued function on Z_N, stored densely.
///
/// Values are allowed to be signed (decompositions produce f - g); the
/// operations that require nonnegativity check it at their boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicFunction {
    values: Vec<f64>,
}

impl CyclicFunction {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyFunction);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        Ok(CyclicFunction { values })
    }

    pub fn constant(n: usize, value: f64) -> Result<Self> {
        CyclicFunction::new(vec![value; n])
    }

    /// Indicator of a set of points, as 0/1 values.
    pub fn indicator<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Result<Self> {
        let mut values = vec![0.0; n];
        for p in points {
            if p >= n {
                return Err(Error::OutOfRange {
                    what: "point",
                    value: p as i64,
                    lo: 0,
                    hi: n as i64 - 1,
                });
            }
            values[p] = 1.0;
        }
        CyclicFunction::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, n: usize) -> f64 {
        self.values[n]
    }

    /// E_{n in Z_N} f(n), by compensated summation.
    pub fn mean(&self) -> f64 {
        let mut sum = 0.0f64;
        let mut carry = 0.0f64;
        for &v in &self.values {
            let y = v - carry;
            let t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
        sum / self.values.len() as f64
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0.0)
    }

    /// Pointwise f - g; both on the same Z_N.
    pub fn sub(&self, other: &CyclicFunction) -> Result<CyclicFunction> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        CyclicFunction::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Zeroes values in [-tol, 0): rounding residue on a function known to
    /// be nonnegative exactly.
    pub(crate) fn zero_negative_dust(&mut self, tol: f64) {
        for v in &mut self.values {
            if *v < 0.0 && *v >= -tol {
                *v = 0.0;
            }
        }
    }
}

/// The normalized transform of a function on Z_N, coefficient per frequency.
#[derive(Clone, Debug)]
pub struct Spectrum {
    coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, r: usize) -> Complex64 {
        self.coeffs[r]
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyFunction);
        }
        Ok(Spectrum { coeffs })
    }

    /// Counting-measure norm (sum_r |c_r|^p)^(1/p); p = infinity gives the max.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::BadExponent(p));
        }
        if p.is_infinite() {
            return Ok(self.coeffs.iter().fold(0.0, |acc, c| acc.max(c.norm())));
        }
        let sum: f64 = self.coeffs.iter().map(|c| c.norm().powf(p)).sum();
        Ok(sum.powf(1.0 / p))
    }

    /// || spectrum - delta_{r=0} ||_infinity: the distance of the transform
    /// from that of the constant-1 function.
    pub fn decay_from_one(&self) -> f64 {
        self.coeffs.iter().enumerate().fold(0.0, |acc, (r, c)| {
            let d = if r == 0 {
                (c - Complex64::new(1.0, 0.0)).norm()
            } else {
                c.norm()
            };
            acc.max(d)
        })
    }

    /// Largest coefficient modulus away from frequency 0.
    pub fn max_nonzero_freq(&self) -> f64 {
        self.coeffs
            .iter()
            .skip(1)
            .fold(0.0, |acc, c| acc.max(c.norm()))
    }
}

/// Normalized transform: f_hat(r) = (1/N) sum_n f(n) exp(-2 pi i rn / N).
pub fn dft(f: &CyclicFunction) -> Spectrum {
    let n = f.len();
    let mut buf: Vec<Complex64> = f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_forward(&mut buf);
    let scale = 1.0 / n as f64;
    for c in &mut buf {
        *c *= scale;
    }
    Spectrum { coeffs: buf }
}

/// Inversion: f(n) = sum_r f_hat(r) exp(2 pi i rn / N). Returns the real
/// part; the imaginary residue of a transform of real data is rounding.
pub fn idft(s: &Spectrum) -> CyclicFunction {
    let mut buf = s.coeffs.clone();
    fft_inverse(&mut buf);
    CyclicFunction {
        values: buf.iter().map(|c| c.re).collect(),
    }
}

/// Expectation-normalized cyclic convolution:
/// (f1 * f2)(n) = E_{k in Z_N} f1(k) f2(n - k).
pub fn convolve(f1: &CyclicFunction, f2: &CyclicFunction) -> Result<CyclicFunction> {
    if f1.len() != f2.len() {
        return Err(Error::LengthMismatch(f1.len(), f2.len()));
    }
    let n = f1.len();
    let mut a: Vec<Complex64> = f1
        .values()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    let mut b: Vec<Complex64> = f2
        .values()
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    fft_forward(&mut a);
    fft_forward(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    fft_inverse(&mut a);
    // one 1/N for the inverse round-trip, one for the expectation
    let scale = 1.0 / (n as f64 * n as f64);
    CyclicFunction::new(a.iter().map(|c| c.re * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol, "{what}: {a} vs {b}");
    }

    #[test]
    fn dft_of_constant() {
        let f = CyclicFunction::constant(12, 1.0).unwrap();
        let s = dft(&f);
        assert_close(s.coeff(0).re, 1.0, 1e-12, "dc");
        for r in 1..12 {
            assert!(s.coeff(r).norm() < 1e-12, "r = {r}");
        }
    }

    #[test]
    fn dft_four_point_by_hand() {
        let f = CyclicFunction::new(vec![2.0, 0.0, 2.0, 0.0]).unwrap();
        let s = dft(&f);
        let expect = [1.0, 0.0, 1.0, 0.0];
        for (r, &e) in expect.iter().enumerate() {
            assert_close(s.coeff(r).re, e, 1e-12, "re");
            assert_close(s.coeff(r).im, 0.0, 1e-12, "im");
        }
    }

    #[test]
    fn dft_of_normalized_point_mass() {
        let n = 7;
        let mut vals = vec![0.0; n];
        vals[0] = n as f64;
        let f = CyclicFunction::new(vals).unwrap();
        let s = dft(&f);
        for r in 0..n {
            assert_close(s.coeff(r).re, 1.0, 1e-12, "re");
            assert_close(s.coeff(r).im, 0.0, 1e-12, "im");
        }
        assert_close(s.lp_norm(2.0).unwrap(), (n as f64).sqrt(), 1e-12, "l2");
    }

    #[test]
    fn norms() {
        let f = CyclicFunction::constant(10, 1.0).unwrap();
        let s = dft(&f);
        for p in [1.0, 2.0, 3.0, f64::INFINITY] {
            assert_close(s.lp_norm(p).unwrap(), 1.0, 1e-9, "norm");
        }
        assert!(s.lp_norm(0.5).is_err());
        assert!(s.lp_norm(f64::NAN).is_err());
    }

    #[test]
    fn convolution_of_constants_and_point_masses() {
        let one = CyclicFunction::constant(9, 1.0).unwrap();
        let c = convolve(&one, &one).unwrap();
        for n in 0..9 {
            assert_close(c.value(n), 1.0, 1e-12, "ones");
        }

        // normalized point mass at 0 is the convolution identity
        let n = 11;
        let mut delta = vec![0.0; n];
        delta[0] = n as f64;
        let delta = CyclicFunction::new(delta).unwrap();
        let f = CyclicFunction::new((0..n).map(|i| (i * i % 7) as f64).collect()).unwrap();
        let g = convolve(&delta, &f).unwrap();
        for i in 0..n {
            assert_close(g.value(i), f.value(i), 1e-9, "identity");
        }

        // two point masses at 1 convolve to one at 2 with value N
        let mut at1 = vec![0.0; n];
        at1[1] = n as f64;
        let at1 = CyclicFunction::new(at1).unwrap();
        let h = convolve(&at1, &at1).unwrap();
        for i in 0..n {
            let expect = if i == 2 { n as f64 } else { 0.0 };
            assert_close(h.value(i), expect, 1e-9, "point pair");
        }
    }

    #[test]
    fn inversion_round_trip() {
        for n in [1usize, 2, 7, 12, 101] {
            let f =
                CyclicFunction::new((0..n).map(|i| ((i * 37 + 11) % 23) as f64 / 7.0).collect())
                    .unwrap();
            let back = idft(&dft(&f));
            for i in 0..n {
                assert_close(
                    back.value(i),
                    f.value(i),
                    1e-9 * f.sup_norm().max(1.0),
                    "rt",
                );
            }
        }
    }

    #[test]
    fn nonneg_max_coeff_is_dc() {
        let f = CyclicFunction::new((0..101).map(|i| ((i * 13) % 17) as f64).collect()).unwrap();
        let s = dft(&f);
        let max = s.lp_norm(f64::INFINITY).unwrap();
        assert_close(max, s.coeff(0).re, 1e-12 * f.sup_norm(), "eq 3.1");
        assert_close(s.coeff(0).re, f.mean(), 1e-12 * f.sup_norm(), "dc = mean");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CyclicFunction::new(vec![]).is_err());
        assert!(CyclicFunction::new(vec![1.0, f64::NAN]).is_err());
        assert!(CyclicFunction::new(vec![f64::INFINITY]).is_err());
        let f = CyclicFunction::constant(4, 1.0).unwrap();
        let g = CyclicFunction::constant(5, 1.0).unwrap();
        assert!(convolve(&f, &g).is_err());
    }
}
