use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use clap::ValueEnum;
use twinsort::FloatKey;

use crate::CliError;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum KeyType {
    #[default]
    Int,
    Float,
    Text,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Order {
    #[default]
    Asc,
    Desc,
}

pub fn read_source(path: Option<&PathBuf>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read(p).map_err(|e| CliError::io(Some(p), e)),
        _ => {
            let mut buf = Vec::new();
            io::stdin()
                .lock()
                .read_to_end(&mut buf)
                .map_err(|e| CliError::io(None, e))?;
            Ok(buf)
        }
    }
}

/// Splits on `\n`; a trailing newline does not start another line and a
/// trailing `\r` is dropped from each line.
pub fn split_lines(data: &[u8]) -> Vec<&[u8]> {
    if data.is_empty() {
        return Vec::new();
    }
    let body = data.strip_suffix(b"\n").unwrap_or(data);
    body.split(|&b| b == b'\n')
        .map(|line| line.strip_suffix(b"\r").unwrap_or(line))
        .collect()
}

fn numeric_text<'a>(line: &'a [u8], number: usize, what: &str) -> Result<&'a str, CliError> {
    std::str::from_utf8(line).map(str::trim).map_err(|_| {
        CliError::Io(format!(
            "line {number}: not valid UTF-8, cannot parse as {what}"
        ))
    })
}

pub fn parse_int(line: &[u8], number: usize) -> Result<i64, CliError> {
    let text = numeric_text(line, number, "int")?;
    text.parse()
        .map_err(|_| CliError::Io(format!("line {number}: cannot parse `{text}` as int")))
}

pub fn parse_float(line: &[u8], number: usize) -> Result<FloatKey, CliError> {
    let text = numeric_text(line, number, "float")?;
    text.parse()
        .map(FloatKey)
        .map_err(|_| CliError::Io(format!("line {number}: cannot parse `{text}` as float")))
}

/// Parses every line with `parse`, reporting the first failure by 1-based
/// line number.
pub fn parse_all<K>(
    lines: &[&[u8]],
    parse: impl Fn(&[u8], usize) -> Result<K, CliError>,
) -> Result<Vec<K>, CliError> {
    lines
        .iter()
        .enumerate()
        .map(|(i, line)| parse(line, i + 1))
        .collect()
}
