//! The battle royale engine.
//!
//! Every iteration sweeps the population in index order. Individual `i` duels
//! its nearest neighbour; the fitter one (smaller index on ties) has its
//! damage reset, the other takes one point of damage. A loser that reaches
//! the damage threshold is respawned uniformly in the current box, otherwise
//! it moves toward the best-ever solution. On a schedule that stretches by
//! half each time, the box shrinks to one population standard deviation
//! around the best-ever position.

use alloc::vec::Vec;

use crate::problems::BenchmarkProblem;
use crate::stats::population_std;
use crate::{
    initialize_population, mbro, nearest_neighbor, Error, Individual, OptimizerConfig, RandomStream, RunResult,
    SearchSpace,
};

/// How a duel loser moves toward the best-ever solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Movement {
    /// Uniform step along the segment to the best: [`bro_move`].
    Classic,
    /// Step driven by a persistent per-individual vector: [`mbro::mbro_move`].
    Lambda,
}

/// Mutable state of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct BroState {
    pub population: Vec<Individual>,
    pub space: SearchSpace,
    /// Best individual ever observed.
    pub best: Individual,
    /// Completed iterations.
    pub iteration: usize,
    /// Iteration count at which the next shrink happens.
    pub delta: usize,
    pub shrink_count: usize,
    pub movement: Movement,
}

/// First shrink milestone: `max_iter / log10(max_iter)`, rounded half away from zero.
pub fn initial_delta(max_iter: usize) -> Result<usize, Error> {
    if max_iter < 2 {
        return Err(Error::Config("shrink schedule needs max_iter >= 2"));
    }
    let n = max_iter as f64;
    Ok(libm::round(n / libm::log10(n)) as usize)
}

/// Next milestone: `delta + round(delta / 2)`, rounded half away from zero.
pub fn next_delta(delta: usize) -> usize {
    delta + delta.div_ceil(2)
}

/// Moves `loser` a uniform fraction of the way toward `best`, independently per dimension.
pub fn bro_move<R: RandomStream + ?Sized>(loser: &[f64], best: &[f64], rng: &mut R) -> Vec<f64> {
    assert_eq!(loser.len(), best.len(), "bro_move: length mismatch");
    loser
        .iter()
        .zip(best)
        .map(|(x, b)| {
            let r = rng.uniform();
            x + r * (b - x)
        })
        .collect()
}

/// Box of one population standard deviation around `best`, per dimension,
/// intersected with the original box of `space`.
pub fn shrink_space(population: &[Individual], best: &Individual, space: &SearchSpace) -> SearchSpace {
    assert!(!population.is_empty(), "shrink_space: empty population");
    let dim = space.dim();
    let mut lower = Vec::with_capacity(dim);
    let mut upper = Vec::with_capacity(dim);
    for d in 0..dim {
        let sd = population_std(population.iter().map(|ind| ind.position[d]));
        lower.push(best.position[d] - sd);
        upper.push(best.position[d] + sd);
    }
    space.with_current(&lower, &upper)
}

impl BroState {
    /// Random initial population in the problem box and the first shrink milestone.
    ///
    /// With `max_iter < 2` no shrink is ever scheduled.
    pub fn new<R: RandomStream + ?Sized>(
        problem: &BenchmarkProblem,
        config: &OptimizerConfig,
        movement: Movement,
        rng: &mut R,
    ) -> Result<Self, Error> {
        config.validate()?;
        let space = problem.space();
        let population = initialize_population(config, &space, problem, movement == Movement::Lambda, rng)?;
        let best =
            population.iter().min_by(|a, b| a.fitness.total_cmp(&b.fitness)).cloned().expect("population is non-empty");
        let delta = if config.max_iter < 2 { usize::MAX } else { initial_delta(config.max_iter)? };
        Ok(BroState { population, space, best, iteration: 0, delta, shrink_count: 0, movement })
    }

    fn observe(&mut self, index: usize) {
        let ind = &self.population[index];
        if ind.fitness < self.best.fitness {
            self.best.clone_from(ind);
        }
    }
}

/// One duel sweep followed by the scheduled shrink, if due.
pub fn bro_step<R: RandomStream + ?Sized>(
    state: &mut BroState,
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    rng: &mut R,
) {
    for i in 0..state.population.len() {
        let j = nearest_neighbor(&state.population, i);
        let (fi, fj) = (state.population[i].fitness, state.population[j].fitness);
        let (winner, loser) = if fi < fj || (fi == fj && i < j) { (i, j) } else { (j, i) };
        state.population[winner].damage = 0;
        state.population[loser].damage += 1;

        if state.population[loser].damage >= config.damage_threshold {
            let ind = &mut state.population[loser];
            ind.position = state.space.sample(rng);
            if state.movement == Movement::Lambda {
                ind.lambda = Some((0..ind.position.len()).map(|_| rng.uniform()).collect());
            }
            ind.damage = 0;
        } else {
            let best = &state.best.position;
            let ind = &mut state.population[loser];
            match state.movement {
                Movement::Classic => ind.position = bro_move(&ind.position, best, rng),
                Movement::Lambda => {
                    let lambda = ind.lambda.take().expect("lambda movement needs a lambda vector");
                    let (position, lambda) = mbro::mbro_move(&ind.position, best, &lambda, rng);
                    ind.position = position;
                    ind.lambda = Some(lambda);
                }
            }
            state.space.clamp_in_place(&mut ind.position);
        }
        let ind = &mut state.population[loser];
        ind.fitness = problem.objective(&ind.position, rng);
        state.observe(loser);
    }

    if state.iteration + 1 >= state.delta {
        state.space = shrink_space(&state.population, &state.best, &state.space);
        for k in 0..state.population.len() {
            let ind = &mut state.population[k];
            if !state.space.contains(&ind.position) {
                state.space.clamp_in_place(&mut ind.position);
                ind.fitness = problem.objective(&ind.position, rng);
                state.observe(k);
            }
        }
        state.delta = next_delta(state.delta);
        state.shrink_count += 1;
    }
    state.iteration += 1;
}

/// Runs the engine for `config.max_iter` iterations with the given movement rule.
pub fn run_engine<R: RandomStream + ?Sized>(
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    movement: Movement,
    rng: &mut R,
) -> Result<RunResult, Error> {
    let mut state = BroState::new(problem, config, movement, rng)?;
    let mut trace = Vec::with_capacity(config.max_iter);
    for _ in 0..config.max_iter {
        bro_step(&mut state, problem, config, rng);
        trace.push(state.best.fitness);
    }
    Ok(RunResult {
        best_fitness: state.best.fitness,
        best_position: state.best.position,
        convergence_trace: trace,
        elapsed: 0.0,
        seed: config.seed,
    })
}

/// Classic battle royale run.
pub fn bro_run<R: RandomStream + ?Sized>(
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    rng: &mut R,
) -> Result<RunResult, Error> {
    run_engine(problem, config, Movement::Classic, rng)
}
