//! File formats and command implementations behind the `ecshape` binary.
//!
//! The binary itself is a thin argument parser; everything it does lives
//! here so the pieces can be tested (and reused) as a library.

use std::io::Write;
use std::path::Path;

pub mod commands;
pub mod csvio;
pub mod ecf1;
pub mod svg;

/// Writes a file through a temporary sibling and an atomic rename, so a
/// crashed or concurrent invocation never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &[u8]) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.persist(path)?;
    Ok(())
}
