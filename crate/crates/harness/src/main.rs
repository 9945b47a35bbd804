use std::path::PathBuf;
use std::process::ExitCode;

use bro_core::problems::{catalog_with, ShiftMode};
use bro_core::Algorithm;
use bro_harness::{emit_catalog, run_experiment, verify, ExperimentSpec, HarnessError};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bro", version, about = "Battle royale optimizer benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)] // parsed once per process
enum Command {
    /// Run an experiment and write runs.csv, aggregate.csv and optional traces.
    Run {
        /// Experiment file (`key = value` lines); command-line options override it.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Algorithms, comma separated (BRO, MBRO, PSO, RANDOM).
        #[arg(long = "algo")]
        algorithms: Vec<String>,
        /// Functions, e.g. `f1,f9`, `f1-f7` or `all`.
        #[arg(long = "fn")]
        functions: Vec<String>,
        #[arg(long)]
        runs: Option<String>,
        #[arg(long)]
        iters: Option<String>,
        #[arg(long)]
        pop: Option<String>,
        #[arg(long)]
        seed: Option<String>,
        /// Dimension of f1..f13.
        #[arg(long)]
        dim: Option<String>,
        #[arg(long)]
        threshold: Option<String>,
        /// printed, raw or none.
        #[arg(long)]
        shifts: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write one convergence trace per run.
        #[arg(long)]
        traces: bool,
        /// Write zero elapsed times so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Write the benchmark catalog.
    Catalog {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "printed")]
        shifts: String,
    },
    /// Check that aggregates and traces in a results directory match its runs.
    Verify {
        #[arg(long)]
        results: PathBuf,
    },
    /// List algorithms and benchmark functions.
    List,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command) -> Result<(), HarnessError> {
    match command {
        Command::Run {
            spec,
            algorithms,
            functions,
            runs,
            iters,
            pop,
            seed,
            dim,
            threshold,
            shifts,
            out,
            traces,
            no_timing,
        } => {
            let mut exp = match spec {
                Some(path) => ExperimentSpec::from_file(&path)?,
                None => ExperimentSpec::default(),
            };
            if !algorithms.is_empty() {
                exp.set("algorithms", &algorithms.join(","))?;
            }
            if !functions.is_empty() {
                exp.set("functions", &functions.join(","))?;
            }
            for (key, value) in [
                ("runs", runs),
                ("max_iter", iters),
                ("pop_size", pop),
                ("seed", seed),
                ("dimension", dim),
                ("damage_threshold", threshold),
                ("shifts", shifts),
            ] {
                if let Some(v) = value {
                    exp.set(key, &v)?;
                }
            }
            if let Some(out) = out {
                exp.output_path = out;
            }
            exp.emit_traces |= traces;
            exp.timing &= !no_timing;
            let report = run_experiment(&exp)?;
            print!("{report}");
            println!("wrote {}", exp.output_path.display());
        }
        Command::Catalog { out, shifts } => {
            let mode: ShiftMode =
                shifts.parse().map_err(|_| HarnessError::config("shifts", "expected printed, raw or none"))?;
            let n = emit_catalog(&out, mode)?;
            println!("wrote {n} functions to {}", out.display());
        }
        Command::Verify { results } => {
            let r = verify(&results)?;
            println!("ok: {} pairs, {} runs, {} traces", r.pairs, r.runs, r.traces);
        }
        Command::List => {
            println!("algorithms: {}", Algorithm::ALL.map(Algorithm::name).join(", "));
            for p in catalog_with(ShiftMode::Printed) {
                println!("{:<4} {:<24} dim {:>2}  [{}, {}]", p.id.to_string(), p.name, p.dimension, p.lower, p.upper);
            }
        }
    }
    Ok(())
}
