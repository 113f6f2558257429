//! Brute-force verification of the twin sort against an independent oracle.
//!
//! [`reference_sort`] shares no code with the sort under test. The exhaustive
//! runner sorts every permutation of `1..=n` and checks order, multiset,
//! early-exit safety and the comparison cap, and measures the exact mean
//! comparison count.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use itertools::Itertools;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::efficiency::worst_case;
use crate::exec::Execution;
use crate::rng::SplitMix64;
use crate::twin::{twin_sort_by, SortStats};

/// Largest `n` the exhaustive runner accepts (9! = 362,880 sorts).
pub const MAX_EXHAUSTIVE_N: usize = 9;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("n = {0} is outside the exhaustive range 1..={MAX_EXHAUSTIVE_N}")]
    OutOfRange(usize),
    #[error("golden file {path}: {source}")]
    GoldenIo { path: String, source: io::Error },
    #[error("golden file {path}: {source}")]
    GoldenFormat {
        path: String,
        source: serde_json::Error,
    },
}

/// Stable insertion into an output vector, written for obviousness.
pub fn reference_sort<T: Clone, F>(elements: &[T], mut compare: F) -> Vec<T>
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut out: Vec<T> = Vec::with_capacity(elements.len());
    for item in elements {
        // Insert after every element that is not greater than `item`.
        let mut pos = out.len();
        while pos > 0 && compare(&out[pos - 1], item) == Ordering::Greater {
            pos -= 1;
        }
        out.insert(pos, item.clone());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    WrongOrder,
    NotPermutation,
    Unstable,
    UnsafeTermination,
    BoundExceeded,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::WrongOrder => "wrong-order",
            FailureKind::NotPermutation => "not-permutation",
            FailureKind::Unstable => "unstable",
            FailureKind::UnsafeTermination => "unsafe-termination",
            FailureKind::BoundExceeded => "bound-exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: Vec<u32>,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub permutations_checked: u64,
    /// In lexicographic order of the failing input.
    pub failures: Vec<Failure>,
    pub max_comparisons: u64,
    pub mean_comparisons: Ratio<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The sort under test: sorts a slice of `u32` in place.
pub trait Sorter: Fn(&mut [u32]) -> SortStats + Sync {}
impl<F: Fn(&mut [u32]) -> SortStats + Sync> Sorter for F {}

fn twin_u32(v: &mut [u32]) -> SortStats {
    twin_sort_by(v, u32::cmp)
}

/// Exhaustively checks the twin sort on every permutation of `1..=n`.
pub fn verify_permutations(n: usize) -> Result<VerificationReport, OracleError> {
    verify_permutations_using(n, Execution::default(), twin_u32)
}

#[derive(Default)]
struct Batch {
    checked: u64,
    total: u64,
    max: u64,
    failures: Vec<Failure>,
}

/// [`verify_permutations`] with an explicit execution strategy and sorter.
///
/// Permutations are split into batches by leading element; each batch walks
/// its suffixes in lexicographic order, so the merged failure list is in
/// global lexicographic order for any strategy.
pub fn verify_permutations_using<S: Sorter>(
    n: usize,
    exec: Execution,
    sorter: S,
) -> Result<VerificationReport, OracleError> {
    if !(1..=MAX_EXHAUSTIVE_N).contains(&n) {
        return Err(OracleError::OutOfRange(n));
    }
    let keys: Vec<u32> = (1..=n as u32).collect();
    let expected = reference_sort(&keys, u32::cmp);
    let cap = worst_case(n as u64);

    let batches = exec.map(keys.clone(), |lead| {
        let rest: Vec<u32> = keys.iter().copied().filter(|&k| k != lead).collect();
        let mut batch = Batch::default();
        let mut work = vec![0u32; n];
        for suffix in rest.into_iter().permutations(n - 1) {
            work[0] = lead;
            work[1..].copy_from_slice(&suffix);
            let input = work.clone();
            let stats = sorter(&mut work);

            batch.checked += 1;
            batch.total += stats.comparisons;
            batch.max = batch.max.max(stats.comparisons);

            let sorted = work.windows(2).all(|w| w[0] <= w[1]);
            let kind = if stats.terminated_early && !sorted {
                Some(FailureKind::UnsafeTermination)
            } else if !sorted {
                Some(FailureKind::WrongOrder)
            } else if work != expected {
                Some(FailureKind::NotPermutation)
            } else if stats.comparisons > cap {
                Some(FailureKind::BoundExceeded)
            } else {
                None
            };
            if let Some(kind) = kind {
                batch.failures.push(Failure { input, kind });
            }
        }
        batch
    });

    let mut report = VerificationReport {
        n,
        permutations_checked: 0,
        failures: Vec::new(),
        max_comparisons: 0,
        mean_comparisons: Ratio::from_integer(0),
    };
    let mut total = 0u64;
    for batch in batches {
        report.permutations_checked += batch.checked;
        total += batch.total;
        report.max_comparisons = report.max_comparisons.max(batch.max);
        report.failures.extend(batch.failures);
    }
    report.mean_comparisons = Ratio::new(total, report.permutations_checked);
    Ok(report)
}

/// Exact mean comparison count of the twin sort over all `n!` permutations.
pub fn empirical_average_comparisons(n: usize) -> Result<Ratio<u64>, OracleError> {
    Ok(verify_permutations(n)?.mean_comparisons)
}

/// How keys are drawn for a stability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DuplicateProfile {
    /// One case with exactly these keys.
    Explicit(Vec<i64>),
    /// One case of `n` identical keys.
    AllEqual,
    /// `cases` random cases of `n` keys drawn from `0..distinct`.
    Random {
        distinct: u64,
        seed: u64,
        cases: usize,
    },
}

/// Outcome of a stability check; `counterexample` holds the first input whose
/// sorted output differed from the reference, payloads included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityOutcome {
    pub cases: usize,
    pub counterexample: Option<Vec<i64>>,
}

impl StabilityOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that the twin sort keeps equal keys in input order.
///
/// Each key is tagged with its input position and the tagged sequence sorted
/// by key only; the result must equal [`reference_sort`] exactly.
pub fn stability_check(n: usize, profile: &DuplicateProfile) -> StabilityOutcome {
    let inputs: Vec<Vec<i64>> = match profile {
        DuplicateProfile::Explicit(keys) => vec![keys.clone()],
        DuplicateProfile::AllEqual => vec![vec![0; n]],
        DuplicateProfile::Random {
            distinct,
            seed,
            cases,
        } => {
            let mut rng = SplitMix64::new(*seed);
            (0..*cases)
                .map(|_| {
                    (0..n)
                        .map(|_| rng.below((*distinct).max(1)) as i64)
                        .collect()
                })
                .collect()
        }
    };
    let cases = inputs.len();
    let counterexample = inputs.into_iter().find(|keys| !is_stable_on(keys));
    StabilityOutcome {
        cases,
        counterexample,
    }
}

/// Twin-sorts `keys` tagged with positions and compares with the reference.
pub fn is_stable_on(keys: &[i64]) -> bool {
    let tagged: Vec<(i64, usize)> = keys.iter().copied().zip(0..).collect();
    let expected = reference_sort(&tagged, |a, b| a.0.cmp(&b.0));
    let mut actual = tagged;
    twin_sort_by(&mut actual, |a, b| a.0.cmp(&b.0));
    actual == expected
}

/// Pinned exact means, keyed by `n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AverageGolden(pub BTreeMap<usize, GoldenRatio>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRatio {
    pub numerator: u64,
    pub denominator: u64,
}

impl From<Ratio<u64>> for GoldenRatio {
    fn from(r: Ratio<u64>) -> Self {
        GoldenRatio {
            numerator: *r.numer(),
            denominator: *r.denom(),
        }
    }
}

impl From<GoldenRatio> for Ratio<u64> {
    fn from(g: GoldenRatio) -> Self {
        Ratio::new(g.numerator, g.denominator)
    }
}

impl AverageGolden {
    pub fn load(path: &Path) -> Result<Self, OracleError> {
        let text = fs::read_to_string(path).map_err(|source| OracleError::GoldenIo {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| OracleError::GoldenFormat {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), OracleError> {
        let io_err = |source| OracleError::GoldenIo {
            path: path.display().to_string(),
            source,
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(io_err)?;
        }
        let mut text = serde_json::to_string_pretty(self).expect("golden map serializes");
        text.push('\n');
        fs::write(path, text).map_err(io_err)
    }

    pub fn get(&self, n: usize) -> Option<Ratio<u64>> {
        self.0.get(&n).copied().map(Ratio::from)
    }

    pub fn insert(&mut self, n: usize, mean: Ratio<u64>) {
        self.0.insert(n, mean.into());
    }
}
