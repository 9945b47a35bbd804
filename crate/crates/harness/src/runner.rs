//! Batch execution of an [`ExperimentSpec`].

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bro_core::problems::{problem, BenchmarkProblem, FunctionId};
use bro_core::stats::{aggregate, AggregateStats};
use bro_core::{Algorithm, OptimizerConfig, RunResult, Stream};
use rayon::prelude::*;

use crate::error::{HarnessError, Result};
use crate::format::{self, number};
use crate::seed::run_seed;
use crate::spec::ExperimentSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub function: FunctionId,
    pub dimension: usize,
    pub run_index: usize,
    pub result: RunResult,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairSummary {
    pub algorithm: Algorithm,
    pub function: FunctionId,
    pub dimension: usize,
    pub stats: AggregateStats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    /// Ordered by algorithm, function, run index.
    pub runs: Vec<RunRecord>,
    pub aggregates: Vec<PairSummary>,
}

impl Report {
    pub fn summary(&self, algorithm: Algorithm, function: FunctionId) -> Option<&AggregateStats> {
        self.aggregates.iter().find(|s| s.algorithm == algorithm && s.function == function).map(|s| &s.stats)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<7} {:<4} {:>4} {:>4} {:>13} {:>11} {:>13} {:>13} {:>13} {:>9}",
            "algo", "fn", "dim", "runs", "mean", "std", "median", "best", "worst", "time[s]"
        )?;
        for s in &self.aggregates {
            let st = &s.stats;
            writeln!(
                f,
                "{:<7} {:<4} {:>4} {:>4} {:>13.6e} {:>11.4e} {:>13.6e} {:>13.6e} {:>13.6e} {:>9.3}",
                s.algorithm.name(),
                s.function.to_string(),
                s.dimension,
                st.n_runs,
                st.mean,
                st.std,
                st.median,
                st.best,
                st.worst,
                st.mean_elapsed
            )?;
        }
        Ok(())
    }
}

/// The benchmark problem a spec runs for `function`.
pub fn prepare_problem(spec: &ExperimentSpec, function: FunctionId) -> Result<BenchmarkProblem> {
    let p = problem(function, spec.shift_mode);
    match spec.dimension_override {
        Some(d) => Ok(p.with_dimension(d)?),
        None => Ok(p),
    }
}

/// Runs every (algorithm, function, run) of `spec` in memory.
///
/// Runs execute in parallel; the report order does not depend on scheduling.
pub fn execute(spec: &ExperimentSpec) -> Result<Report> {
    spec.validate()?;
    let problems: Vec<BenchmarkProblem> =
        spec.functions.iter().map(|&f| prepare_problem(spec, f)).collect::<Result<_>>()?;
    let jobs: Vec<(Algorithm, &BenchmarkProblem, usize)> = spec
        .algorithms
        .iter()
        .flat_map(|&a| problems.iter().flat_map(move |p| (0..spec.runs).map(move |k| (a, p, k))))
        .collect();

    let runs: Vec<RunRecord> = jobs
        .par_iter()
        .map(|&(algorithm, p, run_index)| {
            let seed = run_seed(spec.master_seed, algorithm, p.id, run_index);
            let config = OptimizerConfig::new(algorithm)
                .pop_size(spec.pop_size)
                .max_iter(spec.max_iter)
                .damage_threshold(spec.damage_threshold)
                .seed(seed);
            let started = Instant::now();
            let mut result = bro_core::run(p, &config, &mut Stream::from_seed(seed))?;
            result.elapsed = if spec.timing { started.elapsed().as_secs_f64() } else { 0.0 };
            Ok(RunRecord { algorithm, function: p.id, dimension: p.dimension, run_index, result })
        })
        .collect::<Result<_>>()?;

    let aggregates = runs
        .chunks(spec.runs)
        .map(|chunk| {
            let results: Vec<RunResult> = chunk.iter().map(|r| r.result.clone()).collect();
            Ok(PairSummary {
                algorithm: chunk[0].algorithm,
                function: chunk[0].function,
                dimension: chunk[0].dimension,
                stats: aggregate(&results)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Report { runs, aggregates })
}

/// Runs `spec` and writes its result files under `spec.output_path`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Report> {
    spec.validate()?;
    let dir = &spec.output_path;
    fs::create_dir_all(dir).map_err(HarnessError::io(dir))?;
    let report = execute(spec)?;
    write_report(&report, dir, spec.emit_traces)?;
    Ok(report)
}

pub fn write_report(report: &Report, dir: &Path, traces: bool) -> Result<()> {
    let path = dir.join(format::RUNS_FILE);
    let mut w = format::writer(&path, &format::RUNS_HEADER)?;
    for r in &report.runs {
        w.write_record([
            r.algorithm.name().to_string(),
            r.function.to_string(),
            r.dimension.to_string(),
            r.run_index.to_string(),
            r.result.seed.to_string(),
            number(r.result.best_fitness),
            number(r.result.elapsed),
        ])
        .map_err(HarnessError::csv(&path))?;
    }
    w.flush().map_err(HarnessError::io(&path))?;

    let path = dir.join(format::AGGREGATE_FILE);
    let mut w = format::writer(&path, &format::AGGREGATE_HEADER)?;
    for s in &report.aggregates {
        let st = &s.stats;
        w.write_record([
            s.algorithm.name().to_string(),
            s.function.to_string(),
            s.dimension.to_string(),
            st.n_runs.to_string(),
            number(st.mean),
            number(st.std),
            number(st.median),
            number(st.best),
            number(st.worst),
            number(st.mean_elapsed),
        ])
        .map_err(HarnessError::csv(&path))?;
    }
    w.flush().map_err(HarnessError::io(&path))?;

    if traces {
        let trace_dir: PathBuf = dir.join(format::TRACES_DIR);
        fs::create_dir_all(&trace_dir).map_err(HarnessError::io(&trace_dir))?;
        for r in &report.runs {
            let path =
                trace_dir.join(format::trace_file_name(r.algorithm.name(), &r.function.to_string(), r.run_index));
            let mut w = format::writer(&path, &format::TRACE_HEADER)?;
            for (it, v) in r.result.convergence_trace.iter().enumerate() {
                w.write_record([(it + 1).to_string(), number(*v)]).map_err(HarnessError::csv(&path))?;
            }
            w.flush().map_err(HarnessError::io(&path))?;
        }
    }
    Ok(())
}
