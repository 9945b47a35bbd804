use alloc::vec::Vec;

/// Outcome of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_fitness: f64,
    pub best_position: Vec<f64>,
    /// Best-so-far fitness after each iteration.
    pub convergence_trace: Vec<f64>,
    /// Wall-clock seconds. Left at zero by the optimizers; callers with a
    /// clock fill it in.
    pub elapsed: f64,
    pub seed: u64,
}

impl RunResult {
    /// Trace is non-increasing and ends at `best_fitness`.
    pub fn is_consistent(&self) -> bool {
        self.convergence_trace.windows(2).all(|w| w[1] <= w[0])
            && self.convergence_trace.last() == Some(&self.best_fitness)
    }
}
