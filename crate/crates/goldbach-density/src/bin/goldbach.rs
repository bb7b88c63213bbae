//! Batch experiment driver. Every subcommand emits a structured report
//! document (JSON by default, CSV tables with --format csv) and exits
//! 0 when all assertions passed, 1 on an assertion failure, 2 on
//! usage errors or refused (infeasible) requests.

use clap::{Args, Parser, Subcommand, ValueEnum};
use goldbach_density::error::Error;
use goldbach_density::experiments::{
    self, cache_dir, CounterexampleConfig, CsvRender, DensityProfileConfig, LocalCheckConfig,
    ScanConfig, SieveCacheConfig, SubsetSpec, TransferDemoConfig, TransferFamily,
    DEFAULT_SIEVE_CAP,
};
use goldbach_density::local::VerifyMode;
use goldbach_density::report::ReportDocument;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "goldbach",
    version,
    about = "density-restricted Goldbach experiments"
)]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report format: structured document or plot-ready CSV.
    #[arg(long, global = true, value_enum, default_value_t = Format::Doc)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Doc,
    Csv,
}

#[derive(Args, Clone)]
struct SubsetArgs {
    /// Prime subset: all | counterexample | interval-union.
    #[arg(long, value_enum, default_value_t = SubsetKind::All)]
    subset: SubsetKind,

    /// Interval-union growth factor (requires --subset interval-union).
    #[arg(long, default_value_t = 3.0)]
    alpha: f64,

    /// Interval-union cutoffs N_1 < N_2 < ... (comma separated).
    #[arg(long, value_delimiter = ',')]
    cutoffs: Vec<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubsetKind {
    All,
    Counterexample,
    IntervalUnion,
}

impl SubsetArgs {
    fn spec(&self, m: u64) -> SubsetSpec {
        match self.subset {
            SubsetKind::All => SubsetSpec::All,
            SubsetKind::Counterexample => SubsetSpec::Counterexample { m },
            SubsetKind::IntervalUnion => SubsetSpec::IntervalUnion {
                alpha: self.alpha,
                cutoffs: self.cutoffs.clone(),
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify the local sumset theorem over Z_m.
    LocalCheck {
        /// Odd squarefree modulus.
        #[arg(long = "m", default_value_t = 15)]
        m: u64,
        /// Check every subset pair (refused for phi(m) > 10).
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Check this many seeded random pairs above the threshold.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also collect proper-sumset pairs exactly at the threshold.
        #[arg(long, default_value_t = true)]
        witnesses: bool,
    },

    /// Scan even integers for representability as sums of two subset primes.
    GoldbachScan {
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        #[command(flatten)]
        subset: SubsetArgs,
        /// Modulus for the counterexample subset / residue breakdown.
        #[arg(long = "m", default_value_t = 15)]
        m: u64,
        /// Break exceptional evens down by this residue modulus.
        #[arg(long)]
        residue_mod: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SIEVE_CAP)]
        sieve_cap: u64,
    },

    /// Build the residue-class counterexample subset and verify its
    /// missed class and densities.
    Counterexample {
        #[arg(long = "m", default_value_t = 15)]
        m: u64,
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        /// Allowed |measured - closed form| for the subset density.
        #[arg(long, default_value_t = 0.05)]
        density_tolerance: f64,
        /// Exceptional density among evens must reach 1/m minus this.
        #[arg(long, default_value_t = 0.01)]
        evens_tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_SIEVE_CAP)]
        sieve_cap: u64,
    },

    /// Run the transference pipeline on synthetic or prime-weight inputs.
    TransferDemo {
        /// Input family: synthetic | primes.
        #[arg(long, value_enum, default_value_t = Family::Synthetic)]
        family: Family,
        /// Group order for the synthetic family.
        #[arg(long, default_value_t = 10_007)]
        n: usize,
        #[arg(long, default_value_t = 0.8)]
        delta1: f64,
        #[arg(long, default_value_t = 0.8)]
        delta2: f64,
        /// Primorial-style modulus W for the prime family.
        #[arg(long = "W")]
        w: Option<u64>,
        /// Derive W as the primorial of z.
        #[arg(long = "z")]
        z: Option<u64>,
        #[arg(long, default_value_t = 1)]
        b1: u64,
        #[arg(long, default_value_t = 1)]
        b2: u64,
        /// Scan height M for the prime family (N = floor(M/W)).
        #[arg(long = "M", default_value_t = 200_000)]
        big_m: u64,
        #[command(flatten)]
        subset: SubsetArgs,
        /// Counterexample modulus when --subset counterexample.
        #[arg(long = "m", default_value_t = 15)]
        m: u64,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value_t = 0.1)]
        eta: f64,
        #[arg(long = "p", default_value_t = 3.0)]
        p: f64,
        /// Mean-value bound M on ||f_hat||_p.
        #[arg(long, default_value_t = 2.0)]
        mean_value_bound: f64,
        /// Small-constant dial c (decay budget and eps schedule).
        #[arg(long = "c", default_value_t = 0.01)]
        c: f64,
        /// Explicit spectral cutoff; omit for the default schedule.
        #[arg(long)]
        eps: Option<f64>,
        /// Run even when the hypotheses fail (recorded in the report).
        #[arg(long)]
        force: bool,
        /// Dump f1, f2, nu1, nu2 as binary containers into this directory.
        #[arg(long)]
        dump_functions: Option<PathBuf>,
        /// Spill a large exceptional set to this sidecar file.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },

    /// Tabulate per-class relative densities over a height sweep.
    DensityProfile {
        #[command(flatten)]
        subset: SubsetArgs,
        #[arg(long = "m", default_value_t = 15)]
        m: u64,
        /// Moduli W to profile (comma separated).
        #[arg(long = "W", value_delimiter = ',', default_values_t = vec![1u64, 3])]
        w_values: Vec<u64>,
        /// Height sweep (comma separated); defaults per subset.
        #[arg(long, value_delimiter = ',')]
        heights: Vec<u64>,
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        #[arg(long, default_value_t = DEFAULT_SIEVE_CAP)]
        sieve_cap: u64,
    },

    /// Sieve primes and persist the table as a binary cache.
    SieveCache {
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        /// Cache file; defaults to `$GOLDBACH_CACHE_DIR/primes_<limit>.bin`.
        #[arg(long)]
        path: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Synthetic,
    Primes,
}

fn emit<C: Serialize, R: Serialize + CsvRender>(
    doc: &ReportDocument<C, R>,
    format: Format,
    out: Option<&PathBuf>,
) -> goldbach_density::Result<()> {
    let body = match format {
        Format::Doc => doc.to_json()?,
        Format::Csv => format!(
            "# goldbach {} input_hash={}\n{}",
            doc.command,
            doc.input_hash,
            doc.results.csv()
        ),
    };
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        // a measured conclusion failing its assertion is an experiment
        // failure, not a usage problem
        Error::TransferenceViolation { .. } => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    let out = cli.out.as_ref();
    match cli.command {
        Command::LocalCheck {
            m,
            exhaustive,
            sample,
            seed,
            witnesses,
        } => {
            let mode = match (exhaustive, sample) {
                (false, Some(count)) => VerifyMode::Sampled { count, seed },
                // exhaustive is the default when no sample count is given
                _ => VerifyMode::Exhaustive,
            };
            let cfg = LocalCheckConfig { m, mode, witnesses };
            let (doc, passed) = experiments::run_local_check(&cfg)?;
            emit(&doc, format, out)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::GoldbachScan {
            limit,
            subset,
            m,
            residue_mod,
            sieve_cap,
        } => {
            let cfg = ScanConfig {
                limit,
                subset: subset.spec(m),
                residue_modulus: residue_mod,
                sieve_cap,
            };
            let doc = experiments::run_goldbach_scan(&cfg)?;
            emit(&doc, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Counterexample {
            m,
            limit,
            density_tolerance,
            evens_tolerance,
            sieve_cap,
        } => {
            let cfg = CounterexampleConfig {
                m,
                limit,
                density_tolerance,
                evens_tolerance,
                sieve_cap,
            };
            let (doc, passed) = experiments::run_counterexample(&cfg)?;
            emit(&doc, format, out)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::TransferDemo {
            family,
            n,
            delta1,
            delta2,
            w,
            z,
            b1,
            b2,
            big_m,
            subset,
            m,
            delta,
            eta,
            p,
            mean_value_bound,
            c,
            eps,
            force,
            dump_functions,
            sidecar,
        } => {
            let family = match family {
                Family::Synthetic => TransferFamily::Synthetic { n, delta1, delta2 },
                Family::Primes => {
                    let w = match (w, z) {
                        (Some(w), _) => w,
                        (None, Some(z)) => goldbach_density::primorial(z),
                        (None, None) => 2,
                    };
                    TransferFamily::PrimeWeights {
                        w,
                        b1,
                        b2,
                        big_m,
                        subset: subset.spec(m),
                    }
                }
            };
            let cfg = TransferDemoConfig {
                family,
                delta,
                eta,
                p,
                mean_value_bound,
                c,
                eps,
                force,
                dump_functions,
                sidecar,
            };
            let doc = experiments::run_transfer_demo(&cfg)?;
            emit(&doc, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::DensityProfile {
            subset,
            m,
            w_values,
            heights,
            limit,
            sieve_cap,
        } => {
            let spec = subset.spec(m);
            let heights = if heights.is_empty() {
                experiments::default_heights(&spec, limit)
            } else {
                heights
            };
            let cfg = DensityProfileConfig {
                subset: spec,
                w_values,
                heights,
                sieve_cap,
            };
            let doc = experiments::run_density_profile(&cfg)?;
            emit(&doc, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::SieveCache { limit, path } => {
            let path = path.unwrap_or_else(|| cache_dir().join(format!("primes_{limit}.bin")));
            let cfg = SieveCacheConfig { limit, path };
            let doc = experiments::run_sieve_cache(&cfg)?;
            let ok = doc.results.verified;
            emit(&doc, format, out)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
