//! Battle royale with a persistent per-individual step vector.
//!
//! Each individual carries `lambda`, drawn from `[0, 1)` per dimension at
//! creation and on every respawn. A duel loser updates it and moves by it:
//!
//! ```text
//! lambda' = r1 * best + r2 * (lambda - x)
//! x'      = x + lambda'
//! ```
//!
//! The rest of the engine is shared with [`crate::bro`].

use alloc::vec::Vec;

use crate::bro::{run_engine, Movement};
use crate::problems::BenchmarkProblem;
use crate::{Error, OptimizerConfig, RandomStream, RunResult};

/// Updated `(position, lambda)` of a duel loser; the caller clamps the position.
///
/// `r1` and `r2` are drawn once per move (in that order) and shared by all
/// dimensions.
pub fn mbro_move<R: RandomStream + ?Sized>(
    loser: &[f64],
    best: &[f64],
    lambda: &[f64],
    rng: &mut R,
) -> (Vec<f64>, Vec<f64>) {
    assert!(loser.len() == best.len() && loser.len() == lambda.len(), "mbro_move: length mismatch");
    let r1 = rng.uniform();
    let r2 = rng.uniform();
    let next_lambda: Vec<f64> = (0..loser.len()).map(|d| r1 * best[d] + r2 * (lambda[d] - loser[d])).collect();
    let position = loser.iter().zip(&next_lambda).map(|(x, l)| l + x).collect();
    (position, next_lambda)
}

pub fn mbro_run<R: RandomStream + ?Sized>(
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    rng: &mut R,
) -> Result<RunResult, Error> {
    run_engine(problem, config, Movement::Lambda, rng)
}
