//! Summary statistics over repeated runs.

use alloc::vec::Vec;

use crate::{Error, RunResult};

#[derive(Debug, Clone, PartialEq)]
pub struct AggregateStats {
    pub mean: f64,
    /// Sample standard deviation (divisor `n - 1`; zero for a single run).
    pub std: f64,
    pub median: f64,
    pub best: f64,
    pub worst: f64,
    pub mean_elapsed: f64,
    pub n_runs: usize,
}

/// Aggregates the best fitness of each run.
pub fn aggregate(results: &[RunResult]) -> Result<AggregateStats, Error> {
    let values: Vec<f64> = results.iter().map(|r| r.best_fitness).collect();
    let elapsed: Vec<f64> = results.iter().map(|r| r.elapsed).collect();
    summarize(&values, &elapsed)
}

/// Same as [`aggregate`] on bare values, for callers that only hold the
/// numbers (e.g. rows read back from disk).
pub fn summarize(values: &[f64], elapsed: &[f64]) -> Result<AggregateStats, Error> {
    if values.is_empty() {
        return Err(Error::Config("cannot aggregate zero runs"));
    }
    if values.len() != elapsed.len() {
        return Err(Error::DimensionMismatch { expected: values.len(), found: elapsed.len() });
    }
    let n = values.len();
    let mean = mean(values);
    let std = if n > 1 {
        let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
        libm::sqrt(ss / (n - 1) as f64)
    } else {
        0.0
    };
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let median = if n % 2 == 1 { sorted[n / 2] } else { (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0 };
    Ok(AggregateStats {
        mean,
        std,
        median,
        best: sorted[0],
        worst: sorted[n - 1],
        mean_elapsed: self::mean(elapsed),
        n_runs: n,
    })
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Population standard deviation (divisor `n`) of coordinate `d`.
pub(crate) fn population_std(values: impl Iterator<Item = f64> + Clone) -> f64 {
    let (sum, count) = values.clone().fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    let m = sum / count as f64;
    let ss: f64 = values.map(|v| (v - m) * (v - m)).sum();
    libm::sqrt(ss / count as f64)
}
