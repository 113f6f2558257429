use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;
use serde_json::Value;
use twinsort::{twin_sort_by, twin_sort_traced_by, Element, SortOrder, SortStats};

use crate::input::{self, KeyType, Order};
use crate::CliError;

#[derive(Args, Debug)]
pub struct SortArgs {
    /// Input file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    #[arg(long = "type", value_enum, default_value_t)]
    key_type: KeyType,
    #[arg(long, value_enum, default_value_t)]
    order: Order,
    /// Print run statistics as JSON on standard error.
    #[arg(long)]
    stats: bool,
    /// Write run statistics as JSON to this file.
    #[arg(long, value_name = "PATH")]
    stats_out: Option<PathBuf>,
    /// Print the per-pass snapshots as JSON on standard error.
    #[arg(long)]
    trace: bool,
    /// Write the per-pass snapshots as JSON to this file.
    #[arg(long, value_name = "PATH")]
    trace_out: Option<PathBuf>,
}

/// The stats object written by `sort`; exactly these five fields.
#[derive(Serialize)]
struct StatsJson {
    n: usize,
    comparisons: u64,
    swaps: u64,
    passes: u64,
    terminated_early: bool,
}

impl From<SortStats> for StatsJson {
    fn from(s: SortStats) -> Self {
        StatsJson {
            n: s.n,
            comparisons: s.comparisons,
            swaps: s.swaps,
            passes: s.passes,
            terminated_early: s.terminated_early,
        }
    }
}

struct Sorted<'a> {
    lines: Vec<&'a [u8]>,
    stats: SortStats,
    trace: Option<Vec<Vec<Value>>>,
}

fn sort_keyed<'a, K: Ord + Clone>(
    lines: &[&'a [u8]],
    keys: Vec<K>,
    order: SortOrder,
    traced: bool,
    to_json: impl Fn(&K, &[u8]) -> Value,
) -> Sorted<'a> {
    let mut elements: Vec<Element<K, &'a [u8]>> = keys
        .into_iter()
        .zip(lines.iter().copied())
        .map(|(key, line)| Element::new(key, line))
        .collect();
    let compare = |a: &Element<K, &[u8]>, b: &Element<K, &[u8]>| order.apply(a.cmp_key(b));
    let (stats, trace) = if traced {
        let (stats, trace) = twin_sort_traced_by(&mut elements, compare);
        let snapshots = trace
            .snapshots
            .iter()
            .map(|snap| {
                snap.elements
                    .iter()
                    .map(|e| to_json(&e.key, e.payload))
                    .collect()
            })
            .collect();
        (stats, Some(snapshots))
    } else {
        (twin_sort_by(&mut elements, compare), None)
    };
    Sorted {
        lines: elements.into_iter().map(|e| e.payload).collect(),
        stats,
        trace,
    }
}

fn lossy(line: &[u8]) -> Value {
    Value::String(String::from_utf8_lossy(line).into_owned())
}

fn emit_json(
    value: &impl Serialize,
    to_stderr: bool,
    path: Option<&PathBuf>,
) -> Result<(), CliError> {
    let text = serde_json::to_string(value).expect("json values serialize");
    if to_stderr {
        eprintln!("{text}");
    }
    if let Some(p) = path {
        fs::write(p, format!("{text}\n")).map_err(|e| CliError::io(Some(p), e))?;
    }
    Ok(())
}

pub fn run(args: SortArgs) -> Result<(), CliError> {
    let data = input::read_source(args.input.as_ref())?;
    let lines = input::split_lines(&data);
    let order = match args.order {
        Order::Asc => SortOrder::Ascending,
        Order::Desc => SortOrder::Descending,
    };
    let traced = args.trace || args.trace_out.is_some();

    let sorted = match args.key_type {
        KeyType::Int => {
            let keys = input::parse_all(&lines, input::parse_int)?;
            sort_keyed(&lines, keys, order, traced, |k, _| Value::from(*k))
        }
        KeyType::Float => {
            let keys = input::parse_all(&lines, input::parse_float)?;
            sort_keyed(&lines, keys, order, traced, |k, line| {
                serde_json::Number::from_f64(k.0).map_or_else(|| lossy(line), Value::Number)
            })
        }
        KeyType::Text => {
            let keys: Vec<&[u8]> = lines.clone();
            sort_keyed(&lines, keys, order, traced, |_, line| lossy(line))
        }
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for line in &sorted.lines {
        out.write_all(line)
            .and_then(|_| out.write_all(b"\n"))
            .map_err(|e| CliError::io(None, e))?;
    }
    out.flush().map_err(|e| CliError::io(None, e))?;

    if args.stats || args.stats_out.is_some() {
        emit_json(
            &StatsJson::from(sorted.stats),
            args.stats,
            args.stats_out.as_ref(),
        )?;
    }
    if let Some(trace) = &sorted.trace {
        emit_json(trace, args.trace, args.trace_out.as_ref())?;
    }
    Ok(())
}
