//! Reference optimizers: uniform random search and global-best PSO.
//!
//! Both spend `pop_size` objective evaluations per iteration.

use alloc::vec;
use alloc::vec::Vec;

use crate::problems::BenchmarkProblem;
use crate::{Error, OptimizerConfig, RandomStream, RunResult, SearchSpace};

/// Inertia weight.
pub const INERTIA: f64 = 0.729;
/// Cognitive and social acceleration.
pub const ACCELERATION: f64 = 1.49445;

/// `pop_size * max_iter` uniform samples of the problem box.
pub fn random_search_run<R: RandomStream + ?Sized>(
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    rng: &mut R,
) -> Result<RunResult, Error> {
    config.validate()?;
    let space = problem.space();
    let mut best_position = Vec::new();
    let mut best = f64::INFINITY;
    let mut trace = Vec::with_capacity(config.max_iter);
    for _ in 0..config.max_iter {
        for _ in 0..config.pop_size {
            let x = space.sample(rng);
            let f = problem.objective(&x, rng);
            if f < best || best_position.is_empty() {
                best = f;
                best_position = x;
            }
        }
        trace.push(best);
    }
    Ok(RunResult { best_fitness: best, best_position, convergence_trace: trace, elapsed: 0.0, seed: config.seed })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
}

/// Velocity and position update of one particle. Velocities are clamped to
/// the box width, positions to the box.
pub fn pso_update<R: RandomStream + ?Sized>(
    particle: &mut Particle,
    global_best: &[f64],
    space: &SearchSpace,
    rng: &mut R,
) {
    for (d, &target) in global_best.iter().enumerate() {
        let x = particle.position[d];
        let r = rng.uniform();
        let r_social = rng.uniform();
        let vmax = space.upper()[d] - space.lower()[d];
        let v = INERTIA * particle.velocity[d]
            + ACCELERATION * r * (particle.best_position[d] - x)
            + ACCELERATION * r_social * (target - x);
        particle.velocity[d] = v.clamp(-vmax, vmax);
        particle.position[d] = (x + particle.velocity[d]).clamp(space.lower()[d], space.upper()[d]);
    }
}

/// Global-best PSO with zero initial velocities and synchronous best updates.
pub fn pso_run<R: RandomStream + ?Sized>(
    problem: &BenchmarkProblem,
    config: &OptimizerConfig,
    rng: &mut R,
) -> Result<RunResult, Error> {
    config.validate()?;
    let space = problem.space();
    let mut swarm: Vec<Particle> = (0..config.pop_size)
        .map(|_| {
            let position = space.sample(rng);
            let fitness = problem.objective(&position, rng);
            Particle {
                velocity: vec![0.0; position.len()],
                best_position: position.clone(),
                position,
                best_fitness: fitness,
            }
        })
        .collect();
    let leader = |swarm: &[Particle]| {
        swarm
            .iter()
            .min_by(|a, b| a.best_fitness.total_cmp(&b.best_fitness))
            .map(|p| (p.best_position.clone(), p.best_fitness))
            .expect("swarm is non-empty")
    };
    let (mut gbest, mut gbest_fitness) = leader(&swarm);
    let mut trace = Vec::with_capacity(config.max_iter);
    for _ in 0..config.max_iter {
        for p in swarm.iter_mut() {
            pso_update(p, &gbest, &space, rng);
            let f = problem.objective(&p.position, rng);
            if f < p.best_fitness {
                p.best_fitness = f;
                p.best_position.clone_from(&p.position);
            }
        }
        let (pos, fit) = leader(&swarm);
        if fit < gbest_fitness {
            gbest = pos;
            gbest_fitness = fit;
        }
        trace.push(gbest_fitness);
    }
    Ok(RunResult {
        best_fitness: gbest_fitness,
        best_position: gbest,
        convergence_trace: trace,
        elapsed: 0.0,
        seed: config.seed,
    })
}
