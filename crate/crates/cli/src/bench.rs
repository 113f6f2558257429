use std::io;

use clap::Args;
use twinsort::{run_bench, BenchConfig};

use crate::{CliError, Format};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Comma-separated: twin, insertion, merge, quick.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "twin,insertion,merge,quick"
    )]
    algos: Vec<String>,
    /// Comma-separated: sorted, reversed, random, nearly-sorted, few-unique.
    #[arg(long, value_delimiter = ',', default_value = "random")]
    gens: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "16,64,256")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Skip wall-clock timing; the elapsed_ns column is left empty.
    #[arg(long)]
    no_time: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

pub fn run(args: BenchArgs) -> Result<(), CliError> {
    let config = BenchConfig::from_names(
        &args.algos,
        &args.gens,
        args.sizes,
        args.seed,
        args.trials,
        !args.no_time,
    )
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let records = run_bench(&config).map_err(|e| CliError::Usage(e.to_string()))?;
    match args.format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(io::stdout().lock());
            for record in &records {
                writer
                    .serialize(record)
                    .map_err(|e| CliError::io(None, e))?;
            }
            writer.flush().map_err(|e| CliError::io(None, e))?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&records).expect("records serialize");
            println!("{text}");
        }
    }
    Ok(())
}
