//! Machine-readable dump of the benchmark suite.

use std::path::Path;

use bro_core::problems::{catalog_with, BenchmarkProblem, ShiftMode};

use crate::error::{HarnessError, Result};
use crate::format::{self, number};

/// Shift vectors are `;`-separated; empty fields mean "none".
pub fn catalog_record(p: &BenchmarkProblem) -> [String; 7] {
    [
        p.id.to_string(),
        p.name.to_string(),
        p.dimension.to_string(),
        number(p.lower),
        number(p.upper),
        p.shift.as_ref().map(|s| s.iter().map(|v| number(*v)).collect::<Vec<_>>().join(";")).unwrap_or_default(),
        p.known_best.map(number).unwrap_or_default(),
    ]
}

/// Writes one record per function; returns the record count.
pub fn emit_catalog(path: &Path, mode: ShiftMode) -> Result<usize> {
    let mut w = format::writer(path, &format::CATALOG_HEADER)?;
    let problems = catalog_with(mode);
    for p in &problems {
        w.write_record(catalog_record(p)).map_err(HarnessError::csv(path))?;
    }
    w.flush().map_err(HarnessError::io(path))?;
    Ok(problems.len())
}
