//! One module per subcommand, plus the argument conventions they share.

use std::path::Path;

use anyhow::{bail, Context};
use ecshape::{BettiCurve, Direction, ECCurve, FiltrationSpec};

use crate::csvio;

pub mod classify;
pub mod dist;
pub mod ec_field;
pub mod ec_graph;
pub mod kde;
pub mod precision;
pub mod project;
pub mod rdsim;

/// Filtration direction as a command-line flag.
#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum DirectionArg {
    Sublevel,
    Superlevel,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Direction {
        match d {
            DirectionArg::Sublevel => Direction::Sublevel,
            DirectionArg::Superlevel => Direction::Superlevel,
        }
    }
}

/// Builds a filtration from the `--thresholds` flag.
///
/// Three forms are accepted:
/// - `m` (an integer): m thresholds spread uniformly over `data_range`;
/// - `lo:hi:m`: m thresholds spread uniformly over an explicit range;
/// - anything else: a path to a file with one threshold per line, listed
///   in filtration order (ascending for sublevel, descending for super).
pub fn parse_thresholds(
    arg: &str,
    direction: Direction,
    data_range: (f64, f64),
) -> anyhow::Result<FiltrationSpec> {
    if let Ok(m) = arg.parse::<usize>() {
        let (lo, hi) = data_range;
        return FiltrationSpec::uniform(lo, hi, m, direction)
            .context("cannot spread thresholds over the data range (is it degenerate?)");
    }
    let parts: Vec<&str> = arg.split(':').collect();
    if parts.len() == 3 {
        if let (Ok(lo), Ok(hi), Ok(m)) = (
            parts[0].parse::<f64>(),
            parts[1].parse::<f64>(),
            parts[2].parse::<usize>(),
        ) {
            return Ok(FiltrationSpec::uniform(lo, hi, m, direction)?);
        }
    }
    let text = std::fs::read_to_string(arg)
        .with_context(|| format!("--thresholds {arg:?} is neither a count, lo:hi:m, nor a readable file"))?;
    let mut values = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line
            .parse()
            .with_context(|| format!("{arg}: line {}: {line:?} is not a number", no + 1))?;
        values.push(v);
    }
    Ok(FiltrationSpec::new(direction, values)?)
}

/// Writes a curve as CSV: `threshold,chi` plus Betti columns if provided.
pub fn write_curve(
    path: &Path,
    ec: &ECCurve,
    betti: Option<&BettiCurve>,
) -> anyhow::Result<()> {
    let mut header = vec!["threshold", "chi"];
    if let Some(b) = betti {
        header.push("beta0");
        if b.beta1().is_some() {
            header.push("beta1");
        }
    }
    let mut rows = Vec::with_capacity(ec.len());
    for i in 0..ec.len() {
        let mut row = vec![ec.thresholds()[i], ec.chi()[i] as f64];
        if let Some(b) = betti {
            row.push(b.beta0()[i] as f64);
            if let Some(b1) = b.beta1() {
                row.push(b1[i] as f64);
            }
        }
        rows.push(row);
    }
    csvio::write_table(path, Some(&header), &rows)
}

/// Reads a curve CSV produced by `ec-graph` or `ec-field` (or anything
/// shaped like one): a `threshold` and a `chi` column when a header is
/// present, otherwise the first two columns.
pub fn read_curve(path: &Path) -> anyhow::Result<ECCurve> {
    let table = csvio::read_table(path)?;
    let (t_col, chi_col) = match table.header {
        Some(_) => {
            let t = table
                .column_index("threshold")
                .with_context(|| format!("{}: no threshold column", path.display()))?;
            let c = table
                .column_index("chi")
                .with_context(|| format!("{}: no chi column", path.display()))?;
            (t, c)
        }
        None => {
            if table.width() < 2 {
                bail!("{}: a curve needs at least two columns", path.display());
            }
            (0, 1)
        }
    };
    let thresholds = table.column(t_col);
    let mut chi = Vec::with_capacity(table.rows.len());
    for (i, v) in table.column(chi_col).into_iter().enumerate() {
        if v.fract() != 0.0 || !v.is_finite() {
            bail!("{}: row {}: chi {v} is not an integer", path.display(), i + 1);
        }
        chi.push(v as i64);
    }
    Ok(ECCurve::new(thresholds, chi)?)
}

/// Splits `features.csv,labels.csv` style flag values.
pub fn split_pair(arg: &str) -> anyhow::Result<(&str, &str)> {
    match arg.split_once(',') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() => Ok((a, b)),
        _ => bail!("expected two comma-separated paths, got {arg:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_count_uses_data_range() {
        let spec = parse_thresholds("3", Direction::Sublevel, (0.0, 1.0)).unwrap();
        assert_eq!(spec.thresholds(), [0.0, 0.5, 1.0]);
    }

    #[test]
    fn explicit_range_form() {
        let spec = parse_thresholds("0.5:2.5:3", Direction::Superlevel, (9.0, 10.0)).unwrap();
        assert_eq!(spec.thresholds(), [2.5, 1.5, 0.5]);
    }

    #[test]
    fn threshold_file_form() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.txt");
        std::fs::write(&path, "0.1\n0.4\n\n0.9\n").unwrap();
        let spec = parse_thresholds(
            path.to_str().unwrap(),
            Direction::Sublevel,
            (0.0, 0.0),
        )
        .unwrap();
        assert_eq!(spec.thresholds(), [0.1, 0.4, 0.9]);
    }

    #[test]
    fn garbage_thresholds_fail() {
        assert!(parse_thresholds("no-such-file", Direction::Sublevel, (0.0, 1.0)).is_err());
    }

    #[test]
    fn curve_roundtrip_via_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let ec = ECCurve::new(vec![0.25, 0.5], vec![3, -1]).unwrap();
        write_curve(&path, &ec, None).unwrap();
        assert_eq!(read_curve(&path).unwrap(), ec);
    }

    #[test]
    fn non_integer_chi_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        std::fs::write(&path, "threshold,chi\n0.5,1.5\n").unwrap();
        assert!(read_curve(&path).is_err());
    }
}
