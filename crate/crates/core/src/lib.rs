//! Twin Sort with comparison instrumentation, an exhaustive oracle, the
//! closed-form efficiency model and a benchmark harness.
//!
//! ```
//! let mut v = [5, 4, 3, 2, 1];
//! let stats = twinsort::twin_sort(&mut v);
//! assert_eq!(v, [1, 2, 3, 4, 5]);
//! assert_eq!(stats.comparisons, 10);
//! ```
//!
//! The `parallel` feature (on by default) lets the exhaustive verifier and
//! untimed benchmark runs spread work over rayon's pool. Results are the same
//! either way.

pub mod baseline;
pub mod bench;
pub mod efficiency;
pub mod element;
pub mod exec;
pub mod oracle;
pub mod rng;
pub mod twin;

pub use baseline::Algorithm;
pub use bench::{run_bench, BenchConfig, BenchError, BenchRecord};
pub use efficiency::{
    average_case, best_case, efficiency_table, worst_case, EfficiencyRow, HalfInt,
};
pub use element::{Element, FloatKey, SortOrder};
pub use exec::Execution;
pub use oracle::{
    empirical_average_comparisons, reference_sort, stability_check, verify_permutations,
    DuplicateProfile, VerificationReport,
};
pub use rng::{generate, splitmix64_next, GeneratorKind, SplitMix64};
pub use twin::{
    pairs_for_pass, run_pass, twin_sort, twin_sort_by, twin_sort_traced, twin_sort_traced_by,
    PassOutcome, PassParity, PassSnapshot, PassTrace, SortStats,
};
