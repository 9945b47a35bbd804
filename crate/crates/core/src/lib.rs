//! Battle royale optimization for box-constrained continuous minimization.
//!
//! The crate is `no_std` and only needs an allocator. It contains:
//!
//! * the shared population machinery ([`SearchSpace`], [`Individual`],
//!   [`initialize_population`], [`nearest_neighbor`]),
//! * the classic battle royale engine ([`bro`]) and the variant with a
//!   persistent per-individual step vector ([`mbro`]),
//! * two reference baselines ([`baselines`]): global-best PSO and random search,
//! * the 19-function benchmark suite ([`problems`]),
//! * run aggregation ([`stats`]).
//!
//! Every stochastic routine draws from a caller-supplied [`RandomStream`], so a
//! run is a pure function of its inputs and seed.
//!
//! ```
//! use bro_core::{problems::{catalog, FunctionId}, Algorithm, OptimizerConfig, Stream};
//!
//! let problem = catalog().into_iter().find(|p| p.id == FunctionId::F16).unwrap();
//! let config = OptimizerConfig::new(Algorithm::Mbro).pop_size(30).max_iter(100).seed(7);
//! let result = bro_core::run(&problem, &config, &mut Stream::from_seed(config.seed)).unwrap();
//! assert!((result.best_fitness + 1.0316).abs() < 1e-2);
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod baselines;
pub mod bro;
mod config;
mod error;
pub mod mbro;
mod population;
pub mod problems;
mod result;
mod rng;
mod space;
pub mod stats;

pub use config::{Algorithm, OptimizerConfig};
pub use error::Error;
pub use population::{euclidean_distance, initialize_population, nearest_neighbor, Individual};
pub use result::RunResult;
pub use rng::{RandomStream, Stream};
pub use space::{clamp, SearchSpace};

use problems::BenchmarkProblem;

/// Runs the algorithm selected in `config` on `problem`.
pub fn run<R: RandomStream + ?Sized>(
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    rng: &mut R,
) -> Result<RunResult, Error> {
    match config.algorithm {
        Algorithm::Bro => bro::bro_run(problem, config, rng),
        Algorithm::Mbro => mbro::mbro_run(problem, config, rng),
        Algorithm::Pso => baselines::pso_run(problem, config, rng),
        Algorithm::Random => baselines::random_search_run(problem, config, rng),
    }
}
