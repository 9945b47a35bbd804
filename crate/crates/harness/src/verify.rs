//! Recomputes aggregates from per-run rows and checks traces.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use bro_core::stats::summarize;

use crate::error::{HarnessError, Result};
use crate::format::{self, parse_number};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyReport {
    pub pairs: usize,
    pub runs: usize,
    pub traces: usize,
}

type PairKey = (String, String, String);

struct RunRow {
    run_index: usize,
    best: f64,
    elapsed: f64,
}

fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
}

/// Checks that `dir` is internally consistent: every aggregate row equals
/// the statistics of its per-run rows, and every trace is non-increasing and
/// ends at its run's best fitness.
pub fn verify(dir: &Path) -> Result<VerifyReport> {
    let runs_path = dir.join(format::RUNS_FILE);
    let mut runs: BTreeMap<PairKey, Vec<RunRow>> = BTreeMap::new();
    let mut run_count = 0;
    for rec in format::reader(&runs_path, &format::RUNS_HEADER)?.records() {
        let rec = rec.map_err(HarnessError::csv(&runs_path))?;
        let key = (rec[0].to_string(), rec[1].to_string(), rec[2].to_string());
        let run_index =
            rec[3].parse().map_err(|_| HarnessError::Verify(format!("run_index: `{}` is not an index", &rec[3])))?;
        runs.entry(key).or_default().push(RunRow {
            run_index,
            best: parse_number("best_fitness", &rec[5])?,
            elapsed: parse_number("elapsed_seconds", &rec[6])?,
        });
        run_count += 1;
    }

    let agg_path = dir.join(format::AGGREGATE_FILE);
    let mut pairs = 0;
    for rec in format::reader(&agg_path, &format::AGGREGATE_HEADER)?.records() {
        let rec = rec.map_err(HarnessError::csv(&agg_path))?;
        let key = (rec[0].to_string(), rec[1].to_string(), rec[2].to_string());
        let label = format!("{} {} (dim {})", key.0, key.1, key.2);
        let mut rows =
            runs.remove(&key).ok_or_else(|| HarnessError::Verify(format!("{label}: aggregate row without runs")))?;
        rows.sort_by_key(|r| r.run_index);
        let best: Vec<f64> = rows.iter().map(|r| r.best).collect();
        let elapsed: Vec<f64> = rows.iter().map(|r| r.elapsed).collect();
        let s = summarize(&best, &elapsed)?;
        let n_runs: usize =
            rec[3].parse().map_err(|_| HarnessError::Verify(format!("{label}: bad n_runs `{}`", &rec[3])))?;
        if n_runs != s.n_runs {
            return Err(HarnessError::Verify(format!("{label}: n_runs {n_runs} but {} run rows", s.n_runs)));
        }
        let expected = [s.mean, s.std, s.median, s.best, s.worst, s.mean_elapsed];
        for (col, want) in (4..10).zip(expected) {
            let field = format::AGGREGATE_HEADER[col];
            let got = parse_number(field, &rec[col])?;
            if !close(got, want) {
                return Err(HarnessError::Verify(format!("{label}: {field} is {got}, runs give {want}")));
            }
        }
        pairs += 1;

        let trace_dir = dir.join(format::TRACES_DIR);
        if trace_dir.is_dir() {
            for row in &rows {
                let path = trace_dir.join(format::trace_file_name(&key.0, &key.1, row.run_index));
                if path.exists() {
                    check_trace(&path, row.best)?;
                }
            }
        }
    }
    if let Some((key, _)) = runs.into_iter().next() {
        return Err(HarnessError::Verify(format!(
            "{} {} (dim {}): runs without an aggregate row",
            key.0, key.1, key.2
        )));
    }

    let traces = match fs::read_dir(dir.join(format::TRACES_DIR)) {
        Ok(entries) => entries.count(),
        Err(_) => 0,
    };
    Ok(VerifyReport { pairs, runs: run_count, traces })
}

fn check_trace(path: &Path, best: f64) -> Result<()> {
    let mut last = f64::INFINITY;
    for (expected_iteration, rec) in (1usize..).zip(format::reader(path, &format::TRACE_HEADER)?.records()) {
        let rec = rec.map_err(HarnessError::csv(path))?;
        if rec[0] != *expected_iteration.to_string() {
            return Err(HarnessError::Verify(format!("{}: iteration {} out of order", path.display(), &rec[0])));
        }
        let v = parse_number("best_so_far", &rec[1])?;
        if v > last {
            return Err(HarnessError::Verify(format!("{}: trace increases at iteration {}", path.display(), &rec[0])));
        }
        last = v;
    }
    if last != best {
        return Err(HarnessError::Verify(format!("{}: trace ends at {last}, run reports {best}", path.display())));
    }
    Ok(())
}
