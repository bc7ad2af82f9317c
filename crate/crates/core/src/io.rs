//! Reading numeric vectors from inline text, CSV files and JSON files.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Reads a vector from `source`, which is either a path to an existing file or
/// inline text.
///
/// Inline text is comma-separated decimals or a JSON array. A file starting
/// with `[` is read as a JSON array; any other file is read as CSV with one
/// value per line and an optional non-numeric header line.
pub fn read_vector(source: &str) -> Result<Vec<f64>> {
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
        return if text.trim_start().starts_with('[') {
            parse_json(&text)
        } else {
            parse_csv(&text)
        };
    }
    let trimmed = source.trim();
    if trimmed.starts_with('[') {
        parse_json(trimmed)
    } else {
        parse_inline(trimmed).map_err(|e| match e {
            Error::Parse(msg) if looks_like_path(trimmed) => {
                Error::Parse(format!("{msg} (no file named `{trimmed}` exists)"))
            }
            other => other,
        })
    }
}

/// Parses `0.2,0.3,0.5`.
pub fn parse_inline(text: &str) -> Result<Vec<f64>> {
    if text.trim().is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    text.split(',').map(parse_number).collect()
}

pub fn parse_json(text: &str) -> Result<Vec<f64>> {
    serde_json::from_str::<Vec<f64>>(text)
        .map_err(|e| Error::Parse(format!("expected a JSON array of numbers: {e}")))
}

pub fn parse_csv(text: &str) -> Result<Vec<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(format!("malformed CSV: {e}")))?;
        let fields: Vec<&str> = record.iter().filter(|f| !f.is_empty()).collect();
        if line == 0 && fields.iter().any(|f| f.parse::<f64>().is_err()) {
            continue;
        }
        for field in fields {
            values.push(parse_number(field)?);
        }
    }
    if values.is_empty() {
        return Err(Error::Parse("CSV input holds no values".into()));
    }
    Ok(values)
}

fn parse_number(token: &str) -> Result<f64> {
    let token = token.trim();
    token
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("`{token}` is not a number")))
}

fn looks_like_path(text: &str) -> bool {
    text.contains('/') || text.ends_with(".csv") || text.ends_with(".json") || text.ends_with(".txt")
}
