//! Support library for the `staircase` binary: file formats, the exit-code
//! contract, and the oracle-backed selftest loop. Kept as a library so the
//! integration and acceptance suites can drive it directly.

pub mod formats;

use staircase_core::{oracle, Error, StaircaseIdeal, MAX_EXPONENT};

/// Exit codes are part of the CLI contract:
/// 0 success, 1 usage error or empty result, 2 invalid input,
/// 3 verification mismatch, 4 exponent overflow.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invalid(String),
    Mismatch(String),
    Overflow(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Overflow(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m)
            | CliError::Invalid(m)
            | CliError::Mismatch(m)
            | CliError::Overflow(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ExponentOverflow { .. } => {
                CliError::Overflow(format!("{e}; retry with a smaller --kmax or parameters"))
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message())
    }
}

impl std::error::Error for CliError {}

/// Effective exponent ceiling: `STAIRCASE_MAX_EXP` may lower it for
/// testing; it can never raise it.
pub fn exponent_limit() -> Result<u64, CliError> {
    match std::env::var("STAIRCASE_MAX_EXP") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map(|v| v.min(MAX_EXPONENT))
            .map_err(|_| {
                CliError::Invalid(format!(
                    "STAIRCASE_MAX_EXP must be an unsigned integer, got {text:?}"
                ))
            }),
        Err(std::env::VarError::NotPresent) => Ok(MAX_EXPONENT),
        Err(e) => Err(CliError::Invalid(format!("STAIRCASE_MAX_EXP: {e}"))),
    }
}

/// Outcome of a selftest run.
pub struct SelftestSummary {
    pub cases: u64,
    pub seed: u64,
}

/// Runs `cases` seeded instances split across normalize, product, and
/// power, comparing the fast path with the brute-force oracle. Instance
/// ideals have at most 30 generators and exponents at most 10^6. Any
/// disagreement is a `Mismatch` error.
pub fn run_selftest(seed: u64, cases: u64, limit: u64) -> Result<SelftestSummary, CliError> {
    const MAX_GENS: usize = 30;
    const MAX_EXP: u64 = 1_000_000;
    for i in 0..cases {
        let s = seed.wrapping_add(3 * i);
        match i % 3 {
            0 => {
                // Normalize: the union of three antichains is messy enough,
                // and duplicating one block exercises deduplication.
                let parts = [
                    oracle::random_ideal(s, MAX_GENS, MAX_EXP, false),
                    oracle::random_ideal(s.wrapping_add(1), MAX_GENS, MAX_EXP, false),
                    oracle::random_ideal(s.wrapping_add(2), MAX_GENS, MAX_EXP, false),
                ];
                let mut candidates: Vec<_> = parts
                    .iter()
                    .flat_map(|p| p.gens().iter().copied())
                    .collect();
                candidates.extend(parts[0].gens().iter().copied());
                let fast = StaircaseIdeal::normalize(candidates.iter().copied());
                let naive = oracle::naive_minimalize(&candidates);
                if fast.gens() != naive {
                    return Err(CliError::Mismatch(format!(
                        "selftest case {i} (normalize, seed {s}): fast and naive disagree"
                    )));
                }
            }
            1 => {
                let lhs = oracle::random_ideal(s, MAX_GENS, MAX_EXP, false);
                let rhs = oracle::random_ideal(s.wrapping_add(1), MAX_GENS, MAX_EXP, false);
                let fast = lhs.product_within(&rhs, limit)?;
                let naive = oracle::naive_product(lhs.gens(), rhs.gens())?;
                if fast.gens() != naive {
                    return Err(CliError::Mismatch(format!(
                        "selftest case {i} (product, seed {s}): fast and naive disagree"
                    )));
                }
            }
            _ => {
                let ideal = oracle::random_ideal(s, 10, MAX_EXP, false);
                let fast = ideal.power_within(3, limit)?;
                let naive_sq = oracle::naive_product(ideal.gens(), ideal.gens())?;
                let naive_cu = oracle::naive_product(&naive_sq, ideal.gens())?;
                if fast.gens() != naive_cu {
                    return Err(CliError::Mismatch(format!(
                        "selftest case {i} (power, seed {s}): fast and naive disagree"
                    )));
                }
            }
        }
    }
    Ok(SelftestSummary { cases, seed })
}

pub use formats::LoadedIdeal;
