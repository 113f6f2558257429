//! Closed-form comparison-count model and the practical-efficiencies table.
//!
//! These are the model's numbers, not measurements. The measured mean over all
//! permutations lives in [`crate::oracle::empirical_average_comparisons`] and
//! does not agree with [`average_case`].

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Best case: `n - 1` comparisons, clamped to zero for `n <= 1`.
pub fn best_case(n: u64) -> u64 {
    n.saturating_sub(1)
}

/// Worst case: `(n - 1) * n / 2` comparisons.
pub fn worst_case(n: u64) -> u64 {
    // One of n, n-1 is even.
    if n.is_multiple_of(2) {
        (n / 2) * n.saturating_sub(1)
    } else {
        n * (n.saturating_sub(1) / 2)
    }
}

/// Model average: half the worst case.
pub fn average_case(n: u64) -> HalfInt {
    HalfInt::from_halves(worst_case(n))
}

/// A non-negative multiple of one half, printed with the fewest decimals
/// (`5`, `22.5`, `0.5`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    halves: u64,
}

impl HalfInt {
    pub fn from_halves(halves: u64) -> Self {
        HalfInt { halves }
    }

    pub fn halves(self) -> u64 {
        self.halves
    }

    pub fn is_integer(self) -> bool {
        self.halves.is_multiple_of(2)
    }

    pub fn to_f64(self) -> f64 {
        self.halves as f64 / 2.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.halves / 2)
        } else {
            write!(f, "{}.5", self.halves / 2)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_integer() {
            serializer.serialize_u64(self.halves / 2)
        } else {
            serializer.serialize_f64(self.to_f64())
        }
    }
}

/// One row of the efficiency table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EfficiencyRow {
    pub n: u64,
    pub best: u64,
    pub worst: u64,
    #[serde(rename = "avg")]
    pub average: HalfInt,
}

impl EfficiencyRow {
    pub fn for_size(n: u64) -> Self {
        EfficiencyRow {
            n,
            best: best_case(n),
            worst: worst_case(n),
            average: average_case(n),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("invalid range: min {min} is greater than max {max}")]
    InvertedRange { min: u64, max: u64 },
}

/// Rows for every `n` in `n_min..=n_max`.
pub fn efficiency_table(n_min: u64, n_max: u64) -> Result<Vec<EfficiencyRow>, TableError> {
    if n_min > n_max {
        return Err(TableError::InvertedRange {
            min: n_min,
            max: n_max,
        });
    }
    Ok((n_min..=n_max).map(EfficiencyRow::for_size).collect())
}
