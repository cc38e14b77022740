//! The ECF1 binary field format.
//!
//! Layout, all little-endian:
//!
//! ```text
//! bytes 0..4    magic "ECF1"
//! byte  4       ndim (1, 2, or 3)
//! next 4*ndim   dims, u32 each
//! rest          values, f64 each, row-major
//! ```
//!
//! The byte length must be exactly `5 + 4*ndim + 8*product(dims)`; readers
//! and writers both enforce it.

use std::path::Path;

use anyhow::{bail, Context};
use ecshape::GridField;

use crate::write_atomic;

pub const MAGIC: [u8; 4] = *b"ECF1";

pub fn write_field(path: &Path, field: &GridField) -> anyhow::Result<()> {
    let dims = field.dims();
    let values = field.values();
    let mut bytes = Vec::with_capacity(5 + 4 * dims.len() + 8 * values.len());
    bytes.extend_from_slice(&MAGIC);
    bytes.push(dims.len() as u8);
    for &d in dims {
        let d = u32::try_from(d).context("dimension too large for ECF1")?;
        bytes.extend_from_slice(&d.to_le_bytes());
    }
    for &v in values {
        bytes.extend_from_slice(&v.to_le_bytes());
    }
    write_atomic(path, &bytes)
}

pub fn read_field(path: &Path) -> anyhow::Result<GridField> {
    let bytes = std::fs::read(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_field(&bytes).with_context(|| format!("{}: invalid ECF1 file", path.display()))
}

fn parse_field(bytes: &[u8]) -> anyhow::Result<GridField> {
    if bytes.len() < 5 || bytes[..4] != MAGIC {
        bail!("missing ECF1 magic");
    }
    let ndim = bytes[4] as usize;
    if !(1..=3).contains(&ndim) {
        bail!("ndim must be 1..=3, found {ndim}");
    }
    let header_len = 5 + 4 * ndim;
    if bytes.len() < header_len {
        bail!("truncated header");
    }
    let mut dims = Vec::with_capacity(ndim);
    for a in 0..ndim {
        let at = 5 + 4 * a;
        let d = u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap());
        dims.push(d as usize);
    }
    let count: usize = dims.iter().product();
    let expected = header_len + 8 * count;
    if bytes.len() != expected {
        bail!("expected {expected} bytes for dims {dims:?}, found {}", bytes.len());
    }
    let values = bytes[header_len..]
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Ok(GridField::new(dims, values)?)
}

/// Cheap input-format sniff: does the file start with the ECF1 magic?
pub fn looks_like_ecf1(path: &Path) -> bool {
    let mut buf = [0u8; 4];
    match std::fs::File::open(path) {
        Ok(mut f) => std::io::Read::read_exact(&mut f, &mut buf).is_ok() && buf == MAGIC,
        Err(_) => false,
    }
}
