use std::path::PathBuf;

use clap::{Args, ValueEnum};
use twinsort::oracle::{
    is_stable_on, verify_permutations_using, AverageGolden, DuplicateProfile, MAX_EXHAUSTIVE_N,
};
use twinsort::twin::{twin_sort_by_with, CounterReset};
use twinsort::{average_case, stability_check, worst_case, Execution};

use crate::CliError;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Verify every n from 1 up to this value (at most 9).
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Rewrite the golden file with the measured averages.
    #[arg(long)]
    bless: bool,
    /// Golden file of exact average comparison counts.
    #[arg(
        long,
        value_name = "PATH",
        default_value = "goldens/empirical_avg.json"
    )]
    golden: PathBuf,
    /// Swap in a deliberately broken sort to exercise the checks.
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<Fault>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Fault {
    /// The FALSE-condition counter is never reset on a swap.
    NeverReset,
}

const STABILITY_CASES: usize = 200;

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    if !(1..=MAX_EXHAUSTIVE_N).contains(&args.max_n) {
        return Err(CliError::Usage(format!(
            "--max-n must be between 1 and {MAX_EXHAUSTIVE_N}, got {}",
            args.max_n
        )));
    }
    let reset = match args.inject_fault {
        Some(Fault::NeverReset) => CounterReset::Never,
        None => CounterReset::OnSwap,
    };
    let sorter = move |v: &mut [u32]| twin_sort_by_with(v, u32::cmp, reset);

    let golden = if args.bless || !args.golden.exists() {
        None
    } else {
        Some(AverageGolden::load(&args.golden).map_err(|e| CliError::Io(e.to_string()))?)
    };
    let mut blessed = AverageGolden::default();
    if args.bless && args.golden.exists() {
        blessed = AverageGolden::load(&args.golden).map_err(|e| CliError::Io(e.to_string()))?;
    }

    let mut first_failure: Option<String> = None;
    for n in 1..=args.max_n {
        let report = verify_permutations_using(n, Execution::default(), sorter)
            .expect("n is within the exhaustive range");
        let cap = worst_case(n as u64);
        let mean = report.mean_comparisons;
        let mut problems = Vec::new();

        if let Some(f) = report.failures.first() {
            problems.push(format!(
                "{} on {:?} ({} failing inputs)",
                f.kind,
                f.input,
                report.failures.len()
            ));
        }
        if n >= 2 && report.max_comparisons != cap {
            problems.push(format!(
                "max comparisons {} does not reach cap {cap}",
                report.max_comparisons
            ));
        }

        let stability = if reset == CounterReset::OnSwap {
            let random = stability_check(
                n,
                &DuplicateProfile::Random {
                    distinct: (n as u64 / 2).max(1),
                    seed: n as u64,
                    cases: STABILITY_CASES,
                },
            );
            let all_equal = stability_check(n, &DuplicateProfile::AllEqual);
            random.counterexample.or(all_equal.counterexample)
        } else {
            // Stability of the mutant is not meaningful; check one case so the
            // column still reflects what ran.
            (!is_stable_on(&vec![0; n])).then(|| vec![0; n])
        };
        if let Some(keys) = &stability {
            problems.push(format!("unstable on keys {keys:?}"));
        }

        let golden_note = match golden.as_ref().and_then(|g| g.get(n)) {
            Some(pinned) if pinned == mean => "golden=match".to_string(),
            Some(pinned) => {
                problems.push(format!("mean {mean} differs from golden {pinned}"));
                format!("golden={pinned} MISMATCH")
            }
            None => "golden=none".to_string(),
        };
        if args.bless {
            blessed.insert(n, mean);
        }

        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "n={n} checked={} max={} cap={cap} mean={mean} ({:.6}) model_avg={} stable={} {golden_note} {verdict}",
            report.permutations_checked,
            report.max_comparisons,
            *mean.numer() as f64 / *mean.denom() as f64,
            average_case(n as u64),
            if stability.is_none() { "yes" } else { "no" },
        );
        if first_failure.is_none() {
            if let Some(problem) = problems.first() {
                first_failure = Some(format!("n={n}: {problem}"));
            }
        }
    }

    if args.bless {
        blessed
            .save(&args.golden)
            .map_err(|e| CliError::Io(e.to_string()))?;
        println!("blessed {}", args.golden.display());
    }
    match first_failure {
        Some(msg) => {
            println!("FAIL {msg}");
            Err(CliError::VerificationFailed)
        }
        None => Ok(()),
    }
}
