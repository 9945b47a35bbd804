//! Experiment driver for `bro-core`.
//!
//! An [`ExperimentSpec`] names algorithms, functions and the run protocol.
//! [`run_experiment`] executes every run (in parallel, with per-run seeds
//! derived from the master seed) and writes delimited text:
//!
//! * `runs.csv`: one row per run,
//! * `aggregate.csv`: one row per (algorithm, function) pair,
//! * `traces/<ALGO>_<fn>_runNNN.csv`: best-so-far per iteration, optional.
//!
//! [`verify`] re-derives the aggregates from the run rows and
//! [`emit_catalog`] dumps the benchmark definitions.

pub mod catalog;
pub mod error;
pub mod format;
pub mod runner;
pub mod seed;
pub mod spec;
pub mod verify;

pub use catalog::emit_catalog;
pub use error::{HarnessError, Result};
pub use runner::{execute, run_experiment, Report};
pub use seed::run_seed;
pub use spec::ExperimentSpec;
pub use verify::{verify, VerifyReport};
