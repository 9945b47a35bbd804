use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Which optimizer a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Bro,
    Mbro,
    Pso,
    Random,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Bro, Algorithm::Mbro, Algorithm::Pso, Algorithm::Random];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bro => "BRO",
            Algorithm::Mbro => "MBRO",
            Algorithm::Pso => "PSO",
            Algorithm::Random => "RANDOM",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s) || (s.eq_ignore_ascii_case("M-BRO") && *a == Algorithm::Mbro))
            .ok_or(Error::Config("unknown algorithm"))
    }
}

/// Parameters shared by every optimizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimizerConfig {
    pub pop_size: usize,
    pub max_iter: usize,
    /// Consecutive losses after which an individual is respawned.
    pub damage_threshold: u32,
    pub seed: u64,
    pub algorithm: Algorithm,
}

impl OptimizerConfig {
    /// Population 100, 500 iterations, damage threshold 3.
    pub fn new(algorithm: Algorithm) -> Self {
        OptimizerConfig { pop_size: 100, max_iter: 500, damage_threshold: 3, seed: 0, algorithm }
    }

    pub fn pop_size(mut self, n: usize) -> Self {
        self.pop_size = n;
        self
    }

    pub fn max_iter(mut self, n: usize) -> Self {
        self.max_iter = n;
        self
    }

    pub fn damage_threshold(mut self, n: u32) -> Self {
        self.damage_threshold = n;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.pop_size < 2 {
            return Err(Error::Config("pop_size must be at least 2"));
        }
        if self.max_iter < 1 {
            return Err(Error::Config("max_iter must be at least 1"));
        }
        if self.damage_threshold < 1 {
            return Err(Error::Config("damage_threshold must be at least 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        assert!(OptimizerConfig::new(Algorithm::Bro).validate().is_ok());
    }

    #[test]
    fn rejects_tiny_population() {
        let c = OptimizerConfig::new(Algorithm::Mbro).pop_size(1);
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        let c = OptimizerConfig::new(Algorithm::Mbro).max_iter(0);
        assert!(c.validate().is_err());
    }

    #[test]
    fn parses_names() {
        assert_eq!("mbro".parse::<Algorithm>().unwrap(), Algorithm::Mbro);
        assert_eq!("M-BRO".parse::<Algorithm>().unwrap(), Algorithm::Mbro);
        assert_eq!("Random".parse::<Algorithm>().unwrap(), Algorithm::Random);
        assert!("GOA".parse::<Algorithm>().is_err());
    }
}
