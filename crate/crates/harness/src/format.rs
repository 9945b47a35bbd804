//! Delimited-text layouts shared by the writers and the verifier.

use std::fs::File;
use std::path::Path;

use crate::error::{HarnessError, Result};

pub const RUNS_FILE: &str = "runs.csv";
pub const AGGREGATE_FILE: &str = "aggregate.csv";
pub const TRACES_DIR: &str = "traces";

pub const RUNS_HEADER: [&str; 7] =
    ["algorithm", "function", "dimension", "run_index", "seed", "best_fitness", "elapsed_seconds"];
pub const AGGREGATE_HEADER: [&str; 10] =
    ["algorithm", "function", "dimension", "n_runs", "mean", "std", "median", "best", "worst", "mean_elapsed_seconds"];
pub const TRACE_HEADER: [&str; 2] = ["iteration", "best_so_far"];
pub const CATALOG_HEADER: [&str; 7] = ["id", "name", "dimension", "lower", "upper", "shift", "known_best"];

/// Shortest text that parses back to the same `f64`.
pub fn number(v: f64) -> String {
    format!("{v:?}")
}

pub fn parse_number(field: &str, text: &str) -> Result<f64> {
    text.parse().map_err(|_| HarnessError::Verify(format!("{field}: `{text}` is not a number")))
}

pub fn trace_file_name(algorithm: &str, function: &str, run_index: usize) -> String {
    format!("{algorithm}_{function}_run{run_index:03}.csv")
}

pub(crate) fn writer(path: &Path, header: &[&str]) -> Result<csv::Writer<File>> {
    let file = File::create(path).map_err(HarnessError::io(path))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(header).map_err(HarnessError::csv(path))?;
    Ok(w)
}

pub(crate) fn reader(path: &Path, header: &[&str]) -> Result<csv::Reader<File>> {
    let file = File::open(path).map_err(HarnessError::io(path))?;
    let mut r = csv::Reader::from_reader(file);
    let found = r.headers().map_err(HarnessError::csv(path))?;
    if found.iter().ne(header.iter().copied()) {
        return Err(HarnessError::Verify(format!("{}: unexpected header {:?}", path.display(), found)));
    }
    Ok(r)
}
