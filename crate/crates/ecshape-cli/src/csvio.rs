//! Numeric CSV reading and writing.
//!
//! The dialect is a plain RFC 4180 subset: comma separators, `.` decimal
//! point, no quoting (values are numbers). A single optional header row is
//! auto-detected: if the first token of the first line does not parse as a
//! number, the line is treated as a header. Output uses `{}` formatting,
//! which is the shortest representation that reads back to the same bits.

use std::path::Path;

use anyhow::{bail, Context};

use crate::write_atomic;

/// A parsed CSV: every data row has the same width.
#[derive(Debug)]
pub struct NumericTable {
    pub header: Option<Vec<String>>,
    pub rows: Vec<Vec<f64>>,
}

impl NumericTable {
    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// The values of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[c]).collect()
    }

    /// Index of the named header column, if a header was present.
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header
            .as_ref()
            .and_then(|h| h.iter().position(|c| c == name))
    }
}

pub fn read_table(path: &Path) -> anyhow::Result<NumericTable> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_table(&text).with_context(|| format!("{}: malformed CSV", path.display()))
}

fn parse_table(text: &str) -> anyhow::Result<NumericTable> {
    let mut lines = text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());

    let (first_no, first) = match lines.next() {
        Some(l) => l,
        None => bail!("file is empty"),
    };
    let first_tokens: Vec<&str> = first.split(',').collect();
    let has_header = first_tokens[0].trim().parse::<f64>().is_err();
    let header = if has_header {
        Some(first_tokens.iter().map(|t| t.trim().to_string()).collect())
    } else {
        None
    };

    let mut rows = Vec::new();
    let mut width = if has_header { None } else { Some(first_tokens.len()) };
    let data_lines = if has_header {
        Box::new(lines) as Box<dyn Iterator<Item = (usize, &str)>>
    } else {
        Box::new(std::iter::once((first_no, first)).chain(lines))
    };
    for (no, line) in data_lines {
        let mut row = Vec::new();
        for token in line.split(',') {
            let value: f64 = token
                .trim()
                .parse()
                .with_context(|| format!("line {}: {:?} is not a number", no + 1, token.trim()))?;
            row.push(value);
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                bail!("line {}: expected {} fields, found {}", no + 1, w, row.len())
            }
            _ => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("no data rows");
    }
    Ok(NumericTable { header, rows })
}

pub fn write_table(path: &Path, header: Option<&[&str]>, rows: &[Vec<f64>]) -> anyhow::Result<()> {
    let mut out = String::new();
    if let Some(h) = header {
        out.push_str(&h.join(","));
        out.push('\n');
    }
    for row in rows {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            out.push_str(&format!("{v}"));
            first = false;
        }
        out.push('\n');
    }
    write_atomic(path, out.as_bytes())
}
