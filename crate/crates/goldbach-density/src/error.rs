use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not odd")]
    NotOdd(u64),
    #[error("modulus {0} is not squarefree")]
    NotSquarefree(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("residue sets live over different moduli ({0} vs {1})")]
    ModulusMismatch(u64, u64),
    #[error("{what} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("exhaustive verification refused: phi({m}) = {phi} exceeds the cap {cap} (2^phi subset pairs)")]
    ExhaustiveInfeasible { m: u64, phi: u64, cap: u64 },
    #[error("cyclic functions have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("cyclic function must have at least one point")]
    EmptyFunction,
    #[error("cyclic function contains a non-finite value at index {0}")]
    NonFiniteValue(usize),
    #[error("spectral norm exponent p = {0} must satisfy p >= 1")]
    BadExponent(f64),
    #[error("Bohr set is empty")]
    EmptyBohrSet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("sieve limit {0} must be at least 2")]
    LimitTooSmall(u64),
    #[error("prime table (limit {limit}) too small, need {needed}")]
    TableTooSmall { needed: u64, limit: u64 },
    #[error("no primes congruent to {b} mod {w} up to {m}")]
    NoPrimesInClass { w: u64, b: u64, m: u64 },
    #[error("transference hypotheses failed without force: {0}")]
    HypothesesFailed(String),
    #[error("transference conclusion violated: alpha = {alpha} exceeds eta = {eta} with hypotheses satisfied")]
    TransferenceViolation { alpha: f64, eta: f64 },
    #[error("refusing scan at limit {limit}: needs ~{estimate_bytes} bytes of bit vectors (budget {budget_bytes})")]
    MemoryBudget {
        limit: u64,
        estimate_bytes: u64,
        budget_bytes: u64,
    },
    #[error("scan limit {limit} exceeds the sieve cap {cap}")]
    LimitExceedsCap { limit: u64, cap: u64 },
    #[error("bad cache file: {0}")]
    BadCacheFile(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
