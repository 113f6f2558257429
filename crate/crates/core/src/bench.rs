//! Counted and timed benchmark runs over generated inputs.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::baseline::{sort_with, Algorithm, UnknownAlgorithm};
use crate::exec::Execution;
use crate::rng::{generate, GeneratorKind, SplitMix64, UnknownGenerator};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error(transparent)]
    UnknownAlgorithm(#[from] UnknownAlgorithm),
    #[error(transparent)]
    UnknownGenerator(#[from] UnknownGenerator),
    #[error("at least one {0} is required")]
    Empty(&'static str),
    #[error("trials must be at least 1")]
    NoTrials,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub generators: Vec<GeneratorKind>,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub trials: usize,
    pub measure_time: bool,
}

impl BenchConfig {
    /// Builds a config from algorithm and generator names, rejecting unknown
    /// names and empty axes.
    pub fn from_names<A: AsRef<str>, G: AsRef<str>>(
        algorithms: &[A],
        generators: &[G],
        sizes: Vec<usize>,
        seed: u64,
        trials: usize,
        measure_time: bool,
    ) -> Result<Self, BenchError> {
        let config = BenchConfig {
            algorithms: algorithms
                .iter()
                .map(|a| a.as_ref().parse())
                .collect::<Result<_, _>>()?,
            generators: generators
                .iter()
                .map(|g| g.as_ref().parse())
                .collect::<Result<_, _>>()?,
            sizes,
            seed,
            trials,
            measure_time,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.algorithms.is_empty() {
            return Err(BenchError::Empty("algorithm"));
        }
        if self.generators.is_empty() {
            return Err(BenchError::Empty("generator"));
        }
        if self.sizes.is_empty() {
            return Err(BenchError::Empty("size"));
        }
        if self.trials == 0 {
            return Err(BenchError::NoTrials);
        }
        Ok(())
    }

    /// Input seed for `trial`: the `trial`-th output of a SplitMix64 stream
    /// seeded with `self.seed`. Shared by every algorithm, generator and size.
    pub fn trial_seeds(&self) -> Vec<u64> {
        let mut rng = SplitMix64::new(self.seed);
        (0..self.trials).map(|_| rng.next_u64()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub algo: Algorithm,
    pub generator: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    pub trial: usize,
    pub comparisons: u64,
    pub swaps: u64,
    pub elapsed_ns: Option<u64>,
}

/// Runs one record per (algorithm, generator, size, trial) in that order.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    // Concurrent trials would distort each other's wall time.
    let exec = if config.measure_time {
        Execution::Sequential
    } else {
        Execution::default()
    };
    run_bench_using(config, exec)
}

pub fn run_bench_using(
    config: &BenchConfig,
    exec: Execution,
) -> Result<Vec<BenchRecord>, BenchError> {
    config.validate()?;
    let seeds = config.trial_seeds();
    let mut cells = Vec::new();
    for &algo in &config.algorithms {
        for &generator in &config.generators {
            for &n in &config.sizes {
                for (trial, &seed) in seeds.iter().enumerate() {
                    cells.push((algo, generator, n, trial, seed));
                }
            }
        }
    }
    let measure_time = config.measure_time;
    Ok(exec.map(cells, |(algo, generator, n, trial, seed)| {
        let mut input = generate(generator, n, seed);
        let start = Instant::now();
        let counts = sort_with(algo, &mut input, i64::cmp);
        let elapsed = start.elapsed();
        debug_assert!(input.windows(2).all(|w| w[0] <= w[1]));
        BenchRecord {
            algo,
            generator,
            n,
            seed,
            trial,
            comparisons: counts.comparisons,
            swaps: counts.moves,
            elapsed_ns: measure_time.then(|| elapsed.as_nanos().min(u64::MAX as u128) as u64),
        }
    }))
}
