//! Uniform random streams.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Source of uniform variates in `[0, 1)`.
///
/// All stochastic operations in this crate are generic over this trait so
/// tests can substitute scripted streams.
pub trait RandomStream {
    fn uniform(&mut self) -> f64;
}

impl<T: RandomStream + ?Sized> RandomStream for &mut T {
    fn uniform(&mut self) -> f64 {
        (**self).uniform()
    }
}

/// The default stream: ChaCha8 seeded from a 64-bit value.
#[derive(Debug, Clone)]
pub struct Stream(ChaCha8Rng);

impl Stream {
    pub fn from_seed(seed: u64) -> Self {
        Stream(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Independent child stream for run `index` of a batch seeded with `master`.
    ///
    /// Uses the ChaCha stream id, so children never overlap each other or the
    /// parent stream.
    pub fn for_run(master: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master);
        rng.set_stream(index.wrapping_add(1));
        Stream(rng)
    }
}

impl RandomStream for Stream {
    fn uniform(&mut self) -> f64 {
        // 53 high bits -> [0, 1)
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn same_seed_same_sequence() {
        let a: Vec<f64> = {
            let mut s = Stream::from_seed(42);
            (0..16).map(|_| s.uniform()).collect()
        };
        let b: Vec<f64> = {
            let mut s = Stream::from_seed(42);
            (0..16).map(|_| s.uniform()).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|&u| (0.0..1.0).contains(&u)));
    }

    #[test]
    fn child_streams_differ() {
        let mut a = Stream::for_run(9, 0);
        let mut b = Stream::for_run(9, 1);
        let mut p = Stream::from_seed(9);
        let (x, y, z) = (a.uniform(), b.uniform(), p.uniform());
        assert_ne!(x, y);
        assert_ne!(x, z);
    }
}
