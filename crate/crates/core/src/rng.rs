//! SplitMix64 and the deterministic input generators built on it.
//!
//! The generators are defined bit-for-bit so other implementations can
//! reproduce the same inputs from the same `(kind, n, seed)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// One SplitMix64 step: returns the output and the next state.
pub fn splitmix64_next(state: u64) -> (u64, u64) {
    let next = state.wrapping_add(GOLDEN_GAMMA);
    let mut z = next;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (z ^ (z >> 31), next)
}

/// Stateful wrapper over [`splitmix64_next`].
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        let (value, next) = splitmix64_next(self.state);
        self.state = next;
        value
    }

    /// `next_u64() % bound`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    Sorted,
    Reversed,
    Random,
    NearlySorted,
    FewUnique,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 5] = [
        GeneratorKind::Sorted,
        GeneratorKind::Reversed,
        GeneratorKind::Random,
        GeneratorKind::NearlySorted,
        GeneratorKind::FewUnique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Sorted => "sorted",
            GeneratorKind::Reversed => "reversed",
            GeneratorKind::Random => "random",
            GeneratorKind::NearlySorted => "nearly-sorted",
            GeneratorKind::FewUnique => "few-unique",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown generator `{0}` (expected sorted, reversed, random, nearly-sorted or few-unique)")]
pub struct UnknownGenerator(pub String);

impl FromStr for GeneratorKind {
    type Err = UnknownGenerator;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = s.trim().to_ascii_lowercase().replace('_', "-");
        GeneratorKind::ALL
            .into_iter()
            .find(|kind| kind.name() == normalized || kind.name().replace('-', "") == normalized)
            .ok_or_else(|| UnknownGenerator(s.to_string()))
    }
}

/// Builds the input of `kind` with `n` elements from `seed`.
///
/// * `Sorted`: `0..n`.
/// * `Reversed`: `n-1` down to `0`.
/// * `Random`: Fisher–Yates over `0..n`, `i` from `n-1` down to `1`, swapping
///   with `j = next % (i + 1)`.
/// * `NearlySorted`: `0..n` followed by `ceil(n / 10)` swaps of positions
///   `p, p + 1` with `p = next % (n - 1)`.
/// * `FewUnique`: each element is `next % 4`.
pub fn generate(kind: GeneratorKind, n: usize, seed: u64) -> Vec<i64> {
    let mut rng = SplitMix64::new(seed);
    match kind {
        GeneratorKind::Sorted => (0..n as i64).collect(),
        GeneratorKind::Reversed => (0..n as i64).rev().collect(),
        GeneratorKind::Random => {
            let mut v: Vec<i64> = (0..n as i64).collect();
            for i in (1..n).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                v.swap(i, j);
            }
            v
        }
        GeneratorKind::NearlySorted => {
            let mut v: Vec<i64> = (0..n as i64).collect();
            if n >= 2 {
                for _ in 0..n.div_ceil(10) {
                    let p = rng.below(n as u64 - 1) as usize;
                    v.swap(p, p + 1);
                }
            }
            v
        }
        GeneratorKind::FewUnique => (0..n).map(|_| rng.below(4) as i64).collect(),
    }
}
