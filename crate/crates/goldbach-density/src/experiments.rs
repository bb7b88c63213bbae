//! Reproducible experiment drivers behind the CLI subcommands. Each runner
//! takes a config struct, produces a report document with the full
//! configuration echoed, and says whether its assertions passed.

use crate::error::{Error, Result};
use crate::fourier::CyclicFunction;
use crate::local::{verify_local_theorem, LocalCheckReport, SquarefreeModulus, VerifyMode};
use crate::primes::{sieve, PrimeTable};
use crate::report::{csv_escape, ReportDocument, SummarizedList, SUMMARY_CAP};
use crate::scan::{goldbach_scan, ScanOutcome};
use crate::subsets::{
    counterexample_subset, interval_union_subset, relative_density, PrimeSubset, SubsetDescriptor,
};
use crate::transfer::{
    interval_indicator, run_transference, TransferenceParams, TransferenceReport,
};
use crate::wtrick::{majorant, weighted_subset, WTrickContext};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

pub const DEFAULT_SIEVE_CAP: u64 = 100_000_000;

/// Which primes to feed a scan or demo.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubsetSpec {
    All,
    Counterexample { m: u64 },
    IntervalUnion { alpha: f64, cutoffs: Vec<u64> },
}

impl SubsetSpec {
    pub fn build(&self, table: Arc<PrimeTable>) -> Result<PrimeSubset> {
        match self {
            SubsetSpec::All => Ok(PrimeSubset::all(table)),
            SubsetSpec::Counterexample { m } => {
                let md = SquarefreeModulus::new(*m)?;
                counterexample_subset(&md, table)
            }
            SubsetSpec::IntervalUnion { alpha, cutoffs } => {
                interval_union_subset(*alpha, cutoffs, table)
            }
        }
    }

    /// A natural residue modulus for per-class breakdown, when one exists.
    pub fn residue_modulus(&self) -> Option<u64> {
        match self {
            SubsetSpec::Counterexample { m } => Some(*m),
            _ => None,
        }
    }
}

/// Renders the results section of a document as plot-ready CSV.
pub trait CsvRender {
    fn csv(&self) -> String;
}

fn kv_rows(pairs: &[(&str, String)]) -> String {
    let mut out = String::from("key,value\n");
    for (k, v) in pairs {
        out.push_str(&format!("{},{}\n", k, csv_escape(v)));
    }
    out
}

// ---------------------------------------------------------------- local-check

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LocalCheckConfig {
    pub m: u64,
    pub mode: VerifyMode,
    pub witnesses: bool,
}

pub fn run_local_check(
    cfg: &LocalCheckConfig,
) -> Result<(ReportDocument<LocalCheckConfig, LocalCheckReport>, bool)> {
    let modulus = SquarefreeModulus::new(cfg.m)?;
    let report = verify_local_theorem(&modulus, cfg.mode, cfg.witnesses)?;
    let passed = report.passed();
    let doc = ReportDocument::new("local-check", cfg.clone(), report)?;
    Ok((doc, passed))
}

impl CsvRender for LocalCheckReport {
    fn csv(&self) -> String {
        kv_rows(&[
            ("modulus", self.modulus.to_string()),
            ("phi", self.phi.to_string()),
            ("threshold_numerator", self.threshold_numerator.to_string()),
            (
                "threshold_denominator",
                self.threshold_denominator.to_string(),
            ),
            ("pairs_checked", self.pairs_checked.to_string()),
            ("violations", self.violations.len().to_string()),
            ("sharp_witnesses", self.sharp_witnesses.len().to_string()),
        ])
    }
}

// -------------------------------------------------------------- goldbach-scan

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanConfig {
    pub limit: u64,
    pub subset: SubsetSpec,
    /// Breaks the exceptional set down by n mod this value.
    pub residue_modulus: Option<u64>,
    pub sieve_cap: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GoldbachScanReport {
    pub limit: u64,
    pub subset: SubsetDescriptor,
    pub subset_size: u64,
    pub evens_total: u64,
    pub exceptional_count: u64,
    pub exceptional: SummarizedList,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub by_residue: Option<BTreeMap<u64, u64>>,
    pub density_among_evens: f64,
}

fn scan_report(
    outcome: &ScanOutcome,
    descriptor: SubsetDescriptor,
    residue_modulus: Option<u64>,
) -> GoldbachScanReport {
    GoldbachScanReport {
        limit: outcome.limit,
        subset: descriptor,
        subset_size: outcome.subset_size,
        evens_total: outcome.evens_total,
        exceptional_count: outcome.exceptional_count(),
        exceptional: SummarizedList::from_items(outcome.exceptional.clone()),
        by_residue: residue_modulus.map(|m| outcome.by_residue(m)),
        density_among_evens: outcome.density_among_evens(),
    }
}

pub fn run_goldbach_scan(
    cfg: &ScanConfig,
) -> Result<ReportDocument<ScanConfig, GoldbachScanReport>> {
    if cfg.limit > cfg.sieve_cap {
        return Err(Error::LimitExceedsCap {
            limit: cfg.limit,
            cap: cfg.sieve_cap,
        });
    }
    // refuse the bit-vector allocation up front, before any sieving
    let estimate = crate::scan::estimate_scan_bytes(cfg.limit);
    if estimate > crate::scan::SCAN_MEMORY_BUDGET_BYTES {
        return Err(Error::MemoryBudget {
            limit: cfg.limit,
            estimate_bytes: estimate,
            budget_bytes: crate::scan::SCAN_MEMORY_BUDGET_BYTES,
        });
    }
    let table = Arc::new(sieve(cfg.limit.max(4))?);
    let subset = cfg.subset.build(table)?;
    let outcome = goldbach_scan(&subset, cfg.limit)?;
    let modulus = cfg.residue_modulus.or_else(|| cfg.subset.residue_modulus());
    let report = scan_report(&outcome, subset.descriptor().clone(), modulus);
    ReportDocument::new("goldbach-scan", cfg.clone(), report).map_err(Into::into)
}

impl CsvRender for GoldbachScanReport {
    fn csv(&self) -> String {
        let mut out = kv_rows(&[
            ("limit", self.limit.to_string()),
            ("subset_size", self.subset_size.to_string()),
            ("evens_total", self.evens_total.to_string()),
            ("exceptional_count", self.exceptional_count.to_string()),
            (
                "density_among_evens",
                format!("{:.9}", self.density_among_evens),
            ),
        ]);
        if let Some(by_res) = &self.by_residue {
            out.push_str("\nresidue,exceptional\n");
            for (r, c) in by_res {
                out.push_str(&format!("{r},{c}\n"));
            }
        }
        out
    }
}

// ------------------------------------------------------------- counterexample

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleConfig {
    pub m: u64,
    pub limit: u64,
    /// Allowed distance between the measured subset density and the
    /// closed form 1 - (1/2) prod_{i<s} (p_i - 2)/(p_i - 1).
    pub density_tolerance: f64,
    /// The exceptional density among evens must reach 1/m minus this.
    pub evens_tolerance: f64,
    pub sieve_cap: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleChecks {
    pub density_near_closed_form: bool,
    pub missed_class_fully_exceptional: bool,
    pub evens_density_above_floor: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub m: u64,
    pub limit: u64,
    pub local_classes: Vec<u64>,
    pub local_density_closed_form: f64,
    pub measured_global_density: f64,
    /// Density of the subset within each unit class mod m.
    pub per_class_density: BTreeMap<u64, f64>,
    pub subset_size: u64,
    pub exceptional_count: u64,
    pub density_among_evens: f64,
    pub evens_density_floor: f64,
    pub by_residue: BTreeMap<u64, u64>,
    /// The residue class mod m that sums of two members can never reach.
    pub missed_class: u64,
    pub missed_class_total: u64,
    pub missed_class_exceptional: u64,
    /// Exceptional evens outside that class: further unreachable classes
    /// (the by_residue map shows them) and small-n thinness effects.
    pub other_exceptional: SummarizedList,
    pub checks: CounterexampleChecks,
    pub passed: bool,
}

pub fn run_counterexample(
    cfg: &CounterexampleConfig,
) -> Result<(
    ReportDocument<CounterexampleConfig, CounterexampleReport>,
    bool,
)> {
    if cfg.limit > cfg.sieve_cap {
        return Err(Error::LimitExceedsCap {
            limit: cfg.limit,
            cap: cfg.sieve_cap,
        });
    }
    let modulus = SquarefreeModulus::new(cfg.m)?;
    let table = Arc::new(sieve(cfg.limit.max(4))?);
    let subset = counterexample_subset(&modulus, table)?;
    let local_classes = match subset.descriptor() {
        SubsetDescriptor::ResidueConstruction { classes, .. } => classes.clone(),
        _ => unreachable!("counterexample subsets carry their classes"),
    };

    // closed form 1 - (1/2) prod_{i<s} (p_i - 2)/(p_i - 1)
    let below: f64 = modulus.primes()[..modulus.primes().len() - 1]
        .iter()
        .map(|&p| (p - 2) as f64 / (p - 1) as f64)
        .product();
    let local_density_closed_form = 1.0 - 0.5 * below;

    let measured_global_density = relative_density(&subset, 1, 0, cfg.limit)?;
    let mut per_class_density = BTreeMap::new();
    for b in modulus.units() {
        if modulus.m() == 1 {
            break;
        }
        per_class_density.insert(b, relative_density(&subset, modulus.m(), b, cfg.limit)?);
    }

    let outcome = goldbach_scan(&subset, cfg.limit)?;
    let by_residue = outcome.by_residue(modulus.m());
    let missed_class = 1 % modulus.m();
    let mut missed_class_total = 0u64;
    {
        let mut n = 4u64;
        while n <= cfg.limit {
            if n % modulus.m() == missed_class {
                missed_class_total += 1;
            }
            n += 2;
        }
    }
    let missed_class_exceptional = *by_residue.get(&missed_class).unwrap_or(&0);
    let other: Vec<u64> = outcome
        .exceptional
        .iter()
        .copied()
        .filter(|&n| n % modulus.m() != missed_class)
        .collect();

    let evens_density_floor = 1.0 / modulus.m() as f64 - cfg.evens_tolerance;
    let checks = CounterexampleChecks {
        density_near_closed_form: (measured_global_density - local_density_closed_form).abs()
            <= cfg.density_tolerance,
        missed_class_fully_exceptional: missed_class_exceptional == missed_class_total,
        evens_density_above_floor: outcome.density_among_evens() >= evens_density_floor,
    };
    let passed = checks.density_near_closed_form
        && checks.missed_class_fully_exceptional
        && checks.evens_density_above_floor;

    let report = CounterexampleReport {
        m: modulus.m(),
        limit: cfg.limit,
        local_classes,
        local_density_closed_form,
        measured_global_density,
        per_class_density,
        subset_size: outcome.subset_size,
        exceptional_count: outcome.exceptional_count(),
        density_among_evens: outcome.density_among_evens(),
        evens_density_floor,
        by_residue,
        missed_class,
        missed_class_total,
        missed_class_exceptional,
        other_exceptional: SummarizedList::from_items(other),
        checks,
        passed,
    };
    let doc = ReportDocument::new("counterexample", cfg.clone(), report)?;
    let ok = doc.results.passed;
    Ok((doc, ok))
}

impl CsvRender for CounterexampleReport {
    fn csv(&self) -> String {
        let mut out = kv_rows(&[
            ("m", self.m.to_string()),
            ("limit", self.limit.to_string()),
            (
                "local_density_closed_form",
                format!("{:.9}", self.local_density_closed_form),
            ),
            (
                "measured_global_density",
                format!("{:.9}", self.measured_global_density),
            ),
            ("exceptional_count", self.exceptional_count.to_string()),
            (
                "density_among_evens",
                format!("{:.9}", self.density_among_evens),
            ),
            ("missed_class", self.missed_class.to_string()),
            ("missed_class_total", self.missed_class_total.to_string()),
            (
                "missed_class_exceptional",
                self.missed_class_exceptional.to_string(),
            ),
            ("passed", self.passed.to_string()),
        ]);
        out.push_str("\nclass,subset_density\n");
        for (b, d) in &self.per_class_density {
            out.push_str(&format!("{b},{d:.9}\n"));
        }
        out
    }
}

// -------------------------------------------------------------- transfer-demo

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransferFamily {
    /// Interval indicators of densities delta1, delta2 with nu = 1.
    Synthetic { n: usize, delta1: f64, delta2: f64 },
    /// W-tricked prime weights for a subset, with cap 1 - delta^5.
    PrimeWeights {
        w: u64,
        b1: u64,
        b2: u64,
        big_m: u64,
        subset: SubsetSpec,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransferDemoConfig {
    pub family: TransferFamily,
    pub delta: f64,
    pub eta: f64,
    pub p: f64,
    pub mean_value_bound: f64,
    pub c: f64,
    /// Explicit spectral cutoff; absent means the default schedule
    /// (c * delta^6 * eta)^(2/(4-p)).
    pub eps: Option<f64>,
    pub force: bool,
    /// Directory for binary dumps of f1, f2, nu1, nu2.
    pub dump_functions: Option<PathBuf>,
    /// File for the full exceptional set when it is summarized.
    pub sidecar: Option<PathBuf>,
}

impl TransferDemoConfig {
    pub fn params(&self) -> Result<TransferenceParams> {
        match self.eps {
            Some(eps) => TransferenceParams::with_eps(
                self.delta,
                self.eta,
                self.p,
                self.mean_value_bound,
                self.c,
                eps,
            ),
            None => {
                TransferenceParams::new(self.delta, self.eta, self.p, self.mean_value_bound, self.c)
            }
        }
    }
}

/// Builds (f1, f2, nu1, nu2) for the configured family.
pub fn build_transfer_inputs(
    cfg: &TransferDemoConfig,
) -> Result<(
    CyclicFunction,
    CyclicFunction,
    CyclicFunction,
    CyclicFunction,
)> {
    match &cfg.family {
        TransferFamily::Synthetic { n, delta1, delta2 } => {
            let f1 = interval_indicator(*n, *delta1)?;
            let f2 = interval_indicator(*n, *delta2)?;
            let one = CyclicFunction::constant(*n, 1.0)?;
            Ok((f1, f2, one.clone(), one))
        }
        TransferFamily::PrimeWeights {
            w,
            b1,
            b2,
            big_m,
            subset,
        } => {
            let cap = 1.0 - cfg.delta.powi(5);
            let ctx1 = WTrickContext::new(*w, *b1, *big_m, cap)?;
            let ctx2 = WTrickContext::new(*w, *b2, *big_m, cap)?;
            let need = ctx1.max_lift().max(ctx2.max_lift());
            let table = Arc::new(sieve(need)?);
            let sub = subset.build(table.clone())?;
            let nu1 = majorant(&ctx1, &table)?;
            let nu2 = majorant(&ctx2, &table)?;
            let f1 = weighted_subset(&ctx1, &sub)?;
            let f2 = weighted_subset(&ctx2, &sub)?;
            Ok((f1, f2, nu1, nu2))
        }
    }
}

pub fn run_transfer_demo(
    cfg: &TransferDemoConfig,
) -> Result<ReportDocument<TransferDemoConfig, TransferenceReport>> {
    let params = cfg.params()?;
    let (f1, f2, nu1, nu2) = build_transfer_inputs(cfg)?;
    if let Some(dir) = &cfg.dump_functions {
        std::fs::create_dir_all(dir)?;
        crate::io::write_function(&dir.join("f1.zfn"), &f1)?;
        crate::io::write_function(&dir.join("f2.zfn"), &f2)?;
        crate::io::write_function(&dir.join("nu1.zfn"), &nu1)?;
        crate::io::write_function(&dir.join("nu2.zfn"), &nu2)?;
    }
    let mut report = run_transference(&f1, &f2, &nu1, &nu2, &params, cfg.force)?;
    if report.exceptional_full.len() > SUMMARY_CAP {
        if let Some(path) = &cfg.sidecar {
            let body = serde_json::to_string(&report.exceptional_full)?;
            std::fs::write(path, body)?;
            report.exceptional.sidecar = Some(path.display().to_string());
        }
    }
    ReportDocument::new("transfer-demo", cfg.clone(), report).map_err(Into::into)
}

impl CsvRender for TransferenceReport {
    fn csv(&self) -> String {
        kv_rows(&[
            ("n", self.n.to_string()),
            ("delta1", format!("{:.9}", self.delta1)),
            ("delta2", format!("{:.9}", self.delta2)),
            ("decay1", format!("{:.9}", self.decay1)),
            ("decay2", format!("{:.9}", self.decay2)),
            ("mv1", format!("{:.9}", self.mv1)),
            ("mv2", format!("{:.9}", self.mv2)),
            (
                "bohr_density1",
                format!("{:.9}", self.decomposition1.bohr_density),
            ),
            (
                "bohr_density2",
                format!("{:.9}", self.decomposition2.bohr_density),
            ),
            ("sup_g1", format!("{:.9}", self.decomposition1.sup_g)),
            ("sup_g2", format!("{:.9}", self.decomposition2.sup_g)),
            (
                "min_g_convolution",
                format!("{:.9}", self.lower_bound.min_convolution),
            ),
            ("min_convolution", format!("{:.9}", self.min_convolution)),
            ("conclusion_floor", format!("{:.9}", self.conclusion_floor)),
            ("exceptional_count", self.exceptional.count.to_string()),
            ("alpha", format!("{:.9}", self.alpha)),
            ("hypotheses_pass", self.hypotheses.all_pass.to_string()),
            ("forced", self.forced.to_string()),
        ])
    }
}

// ------------------------------------------------------------ density-profile

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DensityProfileConfig {
    pub subset: SubsetSpec,
    pub w_values: Vec<u64>,
    pub heights: Vec<u64>,
    pub sieve_cap: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DensityRow {
    pub w: u64,
    pub b: u64,
    pub height: u64,
    pub subset_count: u64,
    pub prime_count: u64,
    pub ratio: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DensityProfileReport {
    pub rows: Vec<DensityRow>,
    /// Minimum ratio over the height sweep, per class "W=w,b=b".
    pub per_class_minimum: BTreeMap<String, f64>,
    /// The finite surrogate of inf_{W,b} liminf: minimum over all rows.
    pub infimum: f64,
}

/// For interval-union subsets the natural sweep heights are alpha * N_i
/// (where the density bottoms out); otherwise decades up to the limit.
pub fn default_heights(spec: &SubsetSpec, limit: u64) -> Vec<u64> {
    match spec {
        SubsetSpec::IntervalUnion { alpha, cutoffs } => cutoffs
            .iter()
            .map(|&c| (alpha * c as f64).round() as u64)
            .filter(|&h| h <= limit)
            .collect(),
        _ => {
            let mut h = 1_000u64;
            let mut out = Vec::new();
            while h < limit {
                out.push(h);
                h *= 10;
            }
            out.push(limit);
            out
        }
    }
}

pub fn run_density_profile(
    cfg: &DensityProfileConfig,
) -> Result<ReportDocument<DensityProfileConfig, DensityProfileReport>> {
    let limit = *cfg
        .heights
        .iter()
        .max()
        .ok_or_else(|| Error::InvalidParameter("height sweep is empty".into()))?;
    if limit > cfg.sieve_cap {
        return Err(Error::LimitExceedsCap {
            limit,
            cap: cfg.sieve_cap,
        });
    }
    let table = Arc::new(sieve(limit.max(4))?);
    let subset = cfg.subset.build(table.clone())?;

    let mut heights = cfg.heights.clone();
    heights.sort_unstable();
    heights.dedup();

    let mut rows = Vec::new();
    for &w in &cfg.w_values {
        if w == 0 {
            return Err(Error::InvalidParameter("W must be positive".into()));
        }
        let classes: Vec<u64> = if w == 1 {
            vec![0]
        } else {
            (0..w).filter(|&b| crate::primes::gcd(b, w) == 1).collect()
        };
        // one walk over the primes per W, snapshotting at each height
        let mut subset_counts = vec![0u64; w as usize];
        let mut prime_counts = vec![0u64; w as usize];
        let mut height_idx = 0usize;
        for p in table.primes() {
            while height_idx < heights.len() && p > heights[height_idx] {
                for &b in &classes {
                    rows.push(DensityRow {
                        w,
                        b,
                        height: heights[height_idx],
                        subset_count: subset_counts[(b % w) as usize],
                        prime_count: prime_counts[(b % w) as usize],
                        ratio: ratio_of(
                            subset_counts[(b % w) as usize],
                            prime_counts[(b % w) as usize],
                        ),
                    });
                }
                height_idx += 1;
            }
            if height_idx >= heights.len() {
                break;
            }
            let class = (p % w) as usize;
            prime_counts[class] += 1;
            if subset.contains(p) {
                subset_counts[class] += 1;
            }
        }
        while height_idx < heights.len() {
            for &b in &classes {
                rows.push(DensityRow {
                    w,
                    b,
                    height: heights[height_idx],
                    subset_count: subset_counts[(b % w) as usize],
                    prime_count: prime_counts[(b % w) as usize],
                    ratio: ratio_of(
                        subset_counts[(b % w) as usize],
                        prime_counts[(b % w) as usize],
                    ),
                });
            }
            height_idx += 1;
        }
    }
    rows.sort_by_key(|r| (r.w, r.b, r.height));

    let mut per_class_minimum: BTreeMap<String, f64> = BTreeMap::new();
    let mut infimum = f64::INFINITY;
    for r in &rows {
        if r.prime_count == 0 {
            continue;
        }
        let key = format!("W={},b={}", r.w, r.b);
        let entry = per_class_minimum.entry(key).or_insert(f64::INFINITY);
        *entry = entry.min(r.ratio);
        infimum = infimum.min(r.ratio);
    }
    if !infimum.is_finite() {
        return Err(Error::InvalidParameter(
            "no class contained a prime below any height".into(),
        ));
    }

    let report = DensityProfileReport {
        rows,
        per_class_minimum,
        infimum,
    };
    ReportDocument::new("density-profile", cfg.clone(), report).map_err(Into::into)
}

fn ratio_of(num: u64, den: u64) -> f64 {
    if den == 0 {
        f64::NAN
    } else {
        num as f64 / den as f64
    }
}

impl CsvRender for DensityProfileReport {
    fn csv(&self) -> String {
        let mut out = String::from("w,b,height,subset_count,prime_count,ratio\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{:.9}\n",
                r.w, r.b, r.height, r.subset_count, r.prime_count, r.ratio
            ));
        }
        out
    }
}

// ----------------------------------------------------------------- sieve-cache

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SieveCacheConfig {
    pub limit: u64,
    pub path: PathBuf,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SieveCacheReport {
    pub limit: u64,
    pub primes_count: u64,
    pub path: String,
    pub file_hash: String,
    pub verified: bool,
}

pub fn run_sieve_cache(
    cfg: &SieveCacheConfig,
) -> Result<ReportDocument<SieveCacheConfig, SieveCacheReport>> {
    let table = sieve(cfg.limit)?;
    if let Some(parent) = cfg.path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    crate::io::write_prime_table(&cfg.path, &table)?;
    let bytes = std::fs::read(&cfg.path)?;
    let back = crate::io::read_prime_table(&cfg.path)?;
    let verified = back.limit() == table.limit() && back.bits().words() == table.bits().words();
    let report = SieveCacheReport {
        limit: cfg.limit,
        primes_count: table.count() as u64,
        path: cfg.path.display().to_string(),
        file_hash: format!("{:016x}", crate::report::fnv1a64(&bytes)),
        verified,
    };
    ReportDocument::new("sieve-cache", cfg.clone(), report).map_err(Into::into)
}

impl CsvRender for SieveCacheReport {
    fn csv(&self) -> String {
        kv_rows(&[
            ("limit", self.limit.to_string()),
            ("primes_count", self.primes_count.to_string()),
            ("path", self.path.clone()),
            ("file_hash", self.file_hash.clone()),
            ("verified", self.verified.to_string()),
        ])
    }
}

/// Resolves the cache directory: $GOLDBACH_CACHE_DIR or ./goldbach-cache.
pub fn cache_dir() -> PathBuf {
    std::env::var_os("GOLDBACH_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("goldbach-cache"))
}
