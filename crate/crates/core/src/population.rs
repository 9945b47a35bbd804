use alloc::vec::Vec;

use crate::problems::BenchmarkProblem;
use crate::{Error, OptimizerConfig, RandomStream, SearchSpace};

/// A candidate solution with its cached objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub position: Vec<f64>,
    pub fitness: f64,
    /// Consecutive duel losses.
    pub damage: u32,
    /// Persistent step vector, present only for the modified-movement engine.
    pub lambda: Option<Vec<f64>>,
}

/// Draws `config.pop_size` individuals uniformly in the current box of `space`.
///
/// When `with_lambda` is set each individual also gets a step vector drawn
/// uniformly from `[0, 1)` per dimension, right after its position.
pub fn initialize_population<R: RandomStream + ?Sized>(
    config: &OptimizerConfig,
    space: &SearchSpace,
    problem: &BenchmarkProblem,
    with_lambda: bool,
    rng: &mut R,
) -> Result<Vec<Individual>, Error> {
    if space.dim() != problem.dimension {
        return Err(Error::DimensionMismatch { expected: problem.dimension, found: space.dim() });
    }
    Ok((0..config.pop_size)
        .map(|_| {
            let position = space.sample(rng);
            let lambda = with_lambda.then(|| (0..space.dim()).map(|_| rng.uniform()).collect());
            let fitness = problem.objective(&position, rng);
            Individual { position, fitness, damage: 0, lambda }
        })
        .collect())
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Euclidean distance between two equal-length vectors.
///
/// # Panics
///
/// If the lengths differ.
pub fn euclidean_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "euclidean_distance: length mismatch");
    libm::sqrt(squared_distance(a, b))
}

/// Index of the individual closest to `population[i]`, excluding `i` itself.
///
/// Ties go to the smallest index.
///
/// # Panics
///
/// If the population has fewer than two members or `i` is out of range.
pub fn nearest_neighbor(population: &[Individual], i: usize) -> usize {
    assert!(population.len() >= 2, "nearest_neighbor needs at least two individuals");
    let me = &population[i].position;
    let mut best = usize::MAX;
    let mut best_dist = f64::INFINITY;
    for (j, other) in population.iter().enumerate() {
        if j == i {
            continue;
        }
        // squared distance preserves the ordering of the Euclidean one
        let d = squared_distance(me, &other.position);
        if best == usize::MAX || d < best_dist {
            best = j;
            best_dist = d;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{catalog, FunctionId};
    use crate::{Algorithm, Stream};
    use alloc::vec;

    fn at(points: &[&[f64]]) -> Vec<Individual> {
        points.iter().map(|p| Individual { position: p.to_vec(), fitness: 0.0, damage: 0, lambda: None }).collect()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(euclidean_distance(&[1.5, -2.0], &[1.5, -2.0]), 0.0);
        assert_eq!(euclidean_distance(&[0.0, 0.0], &[3.0, 4.0]), 5.0);
        assert_eq!(euclidean_distance(&[2.0], &[-1.0]), 3.0);
    }

    #[test]
    #[should_panic]
    fn distance_length_mismatch_panics() {
        euclidean_distance(&[1.0], &[1.0, 2.0]);
    }

    #[test]
    fn pair_are_each_others_neighbors() {
        let pop = at(&[&[0.0], &[5.0]]);
        assert_eq!(nearest_neighbor(&pop, 0), 1);
        assert_eq!(nearest_neighbor(&pop, 1), 0);
    }

    #[test]
    fn nearest_in_one_dimension() {
        let pop = at(&[&[0.0], &[1.0], &[10.0]]);
        assert_eq!(nearest_neighbor(&pop, 2), 1);
    }

    #[test]
    fn ties_go_to_smallest_index() {
        let pop = at(&[&[0.0], &[-1.0], &[1.0]]);
        assert_eq!(nearest_neighbor(&pop, 0), 1);
    }

    #[test]
    #[should_panic]
    fn singleton_population_panics() {
        nearest_neighbor(&at(&[&[0.0]]), 0);
    }

    fn sphere(dim: usize) -> BenchmarkProblem {
        catalog().into_iter().find(|p| p.id == FunctionId::F1).unwrap().with_dimension(dim).unwrap()
    }

    #[test]
    fn degenerate_box_gives_origin() {
        let cfg = OptimizerConfig::new(Algorithm::Bro).pop_size(2);
        let space = SearchSpace::uniform(4, 0.0, 0.0).unwrap();
        let pop = initialize_population(&cfg, &space, &sphere(4), false, &mut Stream::from_seed(1)).unwrap();
        assert_eq!(pop.len(), 2);
        for ind in &pop {
            assert_eq!(ind.position, vec![0.0; 4]);
            assert_eq!(ind.damage, 0);
        }
    }

    #[test]
    fn initial_positions_in_range_and_lambda_in_unit_interval() {
        let cfg = OptimizerConfig::new(Algorithm::Mbro);
        let space = SearchSpace::uniform(30, -100.0, 100.0).unwrap();
        let problem = sphere(30);
        let pop = initialize_population(&cfg, &space, &problem, true, &mut Stream::from_seed(3)).unwrap();
        assert_eq!(pop.len(), 100);
        for ind in &pop {
            assert!(space.contains(&ind.position));
            let lambda = ind.lambda.as_ref().unwrap();
            assert_eq!(lambda.len(), 30);
            assert!(lambda.iter().all(|l| (0.0..=1.0).contains(l)));
            assert_eq!(ind.fitness, problem.evaluate(&ind.position, &mut Stream::from_seed(0)).unwrap());
        }
    }

    #[test]
    fn same_seed_same_population() {
        let cfg = OptimizerConfig::new(Algorithm::Mbro);
        let space = SearchSpace::uniform(30, -100.0, 100.0).unwrap();
        let problem = sphere(30);
        let a = initialize_population(&cfg, &space, &problem, true, &mut Stream::from_seed(42)).unwrap();
        let b = initialize_population(&cfg, &space, &problem, true, &mut Stream::from_seed(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dimension_mismatch_is_config_error() {
        let cfg = OptimizerConfig::new(Algorithm::Bro);
        let space = SearchSpace::uniform(3, -1.0, 1.0).unwrap();
        let err = initialize_population(&cfg, &space, &sphere(30), false, &mut Stream::from_seed(1));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
