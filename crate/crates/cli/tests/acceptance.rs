//! Release gate: every acceptance criterion, one PASS/FAIL line each.
//!
//! Run with `cargo test -p twinsort-cli --test acceptance -- --nocapture` to
//! see the report.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use twinsort::oracle::AverageGolden;
use twinsort::{
    average_case, efficiency_table, empirical_average_comparisons, generate, reference_sort,
    run_bench, twin_sort, twin_sort_by, twin_sort_traced, verify_permutations, worst_case,
    Algorithm, BenchConfig, GeneratorKind, SplitMix64,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../goldens/empirical_avg.json")
}

/// Exact means over all permutations, computed once by an independent
/// simulation of the same termination rule and frozen here.
const PINNED_MEANS: [(usize, u64, u64); 8] = [
    (1, 0, 1),
    (2, 1, 1),
    (3, 17, 6),
    (4, 137, 24),
    (5, 229, 24),
    (6, 10273, 720),
    (7, 100129, 5040),
    (8, 1063553, 40320),
];

fn golden_trace() -> Check {
    let mut v = [5, 4, 3, 2, 1];
    let start = Instant::now();
    let (stats, trace) = twin_sort_traced(&mut v);
    let elapsed = start.elapsed();
    let snaps: Vec<Vec<i32>> = trace.snapshots.into_iter().map(|s| s.elements).collect();
    let expected = vec![
        vec![4, 5, 2, 3, 1],
        vec![4, 2, 5, 1, 3],
        vec![2, 4, 1, 5, 3],
        vec![2, 1, 4, 3, 5],
        vec![1, 2, 3, 4, 5],
    ];
    ensure(snaps == expected, || format!("snapshots {snaps:?}"))?;
    ensure(stats.comparisons == 10 && stats.swaps == 10, || {
        format!("{stats:?}")
    })?;
    ensure(elapsed < Duration::from_millis(1), || {
        format!("took {elapsed:?}")
    })
}

fn table_reproduction() -> Check {
    // n, best, worst, avg as printed.
    let printed = [
        (2, 1, 1, "0.5"),
        (3, 2, 3, "1.5"),
        (4, 3, 6, "3"),
        (5, 4, 10, "5"),
        (6, 5, 15, "7.5"),
        (7, 6, 21, "10.5"),
        (8, 7, 28, "14"),
        (9, 8, 36, "18"),
        (10, 9, 45, "22.5"),
        (11, 10, 55, "27.5"),
        (12, 11, 66, "33"),
        (13, 12, 78, "39"),
    ];
    let rows = efficiency_table(2, 13).map_err(|e| e.to_string())?;
    ensure(rows.len() == printed.len(), || {
        format!("{} rows", rows.len())
    })?;
    for (row, (n, best, worst, avg)) in rows.iter().zip(printed) {
        ensure(
            (row.n, row.best, row.worst, row.average.to_string().as_str()) == (n, best, worst, avg),
            || format!("row {row:?} vs ({n},{best},{worst},{avg})"),
        )?;
    }
    Ok(())
}

fn measured_best_case() -> Check {
    for n in 2..=13usize {
        let mut v = generate(GeneratorKind::Sorted, n, 0);
        let s = twin_sort(&mut v);
        ensure(
            s.comparisons == n as u64 - 1 && s.swaps == 0 && s.passes <= 2 && s.terminated_early,
            || format!("n={n}: {s:?}"),
        )?;
    }
    Ok(())
}

fn measured_worst_case() -> Check {
    for n in 2..=13usize {
        let mut v = generate(GeneratorKind::Reversed, n, 0);
        let s = twin_sort(&mut v);
        let expected = (n as u64 - 1) * n as u64 / 2;
        ensure(s.comparisons == expected, || {
            format!("n={n}: {} != {expected}", s.comparisons)
        })?;
    }
    Ok(())
}

fn exhaustive_correctness() -> Check {
    let start = Instant::now();
    for n in 1..=8 {
        let r = verify_permutations(n).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n={n}: {:?}", r.failures.first()))?;
        ensure(
            r.permutations_checked == (1..=n as u64).product::<u64>(),
            || format!("n={n}: checked {}", r.permutations_checked),
        )?;
        if n >= 2 {
            ensure(r.max_comparisons == worst_case(n as u64), || {
                format!("n={n}: max {}", r.max_comparisons)
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })
}

fn stability() -> Check {
    let mut rng = SplitMix64::new(6);
    for case in 0..1000 {
        let n = rng.below(64) as usize + 1;
        let distinct = rng.below(8) + 1;
        let tagged: Vec<(u64, usize)> = (0..n).map(|i| (rng.below(distinct), i)).collect();
        let expected = reference_sort(&tagged, |a, b| a.0.cmp(&b.0));
        let mut actual = tagged.clone();
        twin_sort_by(&mut actual, |a, b| a.0.cmp(&b.0));
        ensure(actual == expected, || {
            format!("case {case}: input {tagged:?}")
        })?;
    }
    Ok(())
}

fn average_honesty() -> Check {
    let golden = AverageGolden::load(&golden_path()).map_err(|e| e.to_string())?;
    for (n, num, den) in PINNED_MEANS {
        let measured = empirical_average_comparisons(n).map_err(|e| e.to_string())?;
        let pinned = Ratio::new(num, den);
        ensure(golden.get(n) == Some(pinned), || {
            format!("golden file n={n}: {:?}", golden.get(n))
        })?;
        ensure(measured == pinned, || {
            format!("n={n}: measured {measured} vs pinned {pinned}")
        })?;
        println!(
            "    n={n}: measured {measured} ({:.4}), model {}",
            num as f64 / den as f64,
            average_case(n as u64)
        );
    }
    Ok(())
}

fn strip_elapsed(csv: &str) -> String {
    csv.lines()
        .map(|line| line.rsplit_once(',').map_or(line, |(head, _)| head))
        .collect::<Vec<_>>()
        .join("\n")
}

fn bench_determinism() -> Check {
    let args = [
        "bench",
        "--algos",
        "twin,insertion,merge,quick",
        "--gens",
        "sorted,reversed,random,nearly-sorted,few-unique",
        "--sizes",
        "1,7,64,200",
        "--trials",
        "3",
        "--seed",
        "12345",
    ];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_twinsort"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())
            .and_then(|o| {
                ensure(o.status.success(), || format!("exit {:?}", o.status.code()))?;
                String::from_utf8(o.stdout).map_err(|e| e.to_string())
            })
    };
    let (a, b) = (run()?, run()?);
    ensure(a.lines().count() == 1 + 4 * 5 * 4 * 3, || {
        format!("{} lines", a.lines().count())
    })?;
    ensure(strip_elapsed(&a) == strip_elapsed(&b), || {
        "outputs differ outside elapsed_ns".into()
    })
}

fn comparative_sanity() -> Check {
    let config = BenchConfig::from_names(
        &["twin", "merge"],
        &["random"],
        vec![256, 1024],
        9,
        3,
        false,
    )
    .map_err(|e| e.to_string())?;
    let records = run_bench(&config).map_err(|e| e.to_string())?;
    let (twin, merge): (Vec<_>, Vec<_>) = records.iter().partition(|r| r.algo == Algorithm::Twin);
    ensure(twin.len() == 6 && merge.len() == 6, || {
        format!("{} records", records.len())
    })?;
    for (t, m) in twin.iter().zip(&merge) {
        ensure((t.n, t.trial, t.seed) == (m.n, m.trial, m.seed), || {
            "records misaligned".into()
        })?;
        ensure(m.comparisons < t.comparisons, || {
            format!(
                "n={} trial {}: merge {} vs twin {}",
                t.n, t.trial, m.comparisons, t.comparisons
            )
        })?;
        println!(
            "    n={} trial {}: twin {} merge {}",
            t.n, t.trial, t.comparisons, m.comparisons
        );
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 golden trace of 5,4,3,2,1", golden_trace),
        ("2 efficiency table n=2..13", table_reproduction),
        ("3 measured best case n=2..13", measured_best_case),
        ("4 measured worst case n=2..13", measured_worst_case),
        ("5 exhaustive correctness n<=8", exhaustive_correctness),
        ("6 stability, 1000 seeded cases", stability),
        ("7 empirical averages vs golden", average_honesty),
        ("8 bench determinism", bench_determinism),
        ("9 merge beats twin on random 256/1024", comparative_sanity),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
