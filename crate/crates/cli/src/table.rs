use std::io;

use clap::Args;
use twinsort::efficiency_table;

use crate::{CliError, Format};

const MAX_TABLE_N: u64 = 1_000_000;

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 2)]
    min: u64,
    #[arg(long, default_value_t = 13)]
    max: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

pub fn run(args: TableArgs) -> Result<(), CliError> {
    if args.max > MAX_TABLE_N {
        return Err(CliError::Usage(format!(
            "--max must be at most {MAX_TABLE_N}"
        )));
    }
    let rows = efficiency_table(args.min, args.max).map_err(|e| CliError::Usage(e.to_string()))?;
    match args.format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(io::stdout().lock());
            for row in &rows {
                writer.serialize(row).map_err(|e| CliError::io(None, e))?;
            }
            writer.flush().map_err(|e| CliError::io(None, e))?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            println!("{text}");
        }
    }
    Ok(())
}
