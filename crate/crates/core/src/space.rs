use alloc::vec::Vec;

use crate::Error;

/// Box constraints: the current (possibly shrunk) box and the original one.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
    original_lower: Vec<f64>,
    original_upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, Error> {
        if lower.is_empty() {
            return Err(Error::Config("search space needs at least one dimension"));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), found: upper.len() });
        }
        if lower.iter().zip(&upper).any(|(lo, hi)| !(lo.is_finite() && hi.is_finite() && lo <= hi)) {
            return Err(Error::Config("every lower bound must be finite and not exceed its upper bound"));
        }
        Ok(SearchSpace { original_lower: lower.clone(), original_upper: upper.clone(), lower, upper })
    }

    /// Same bounds `[lower, upper]` in each of `dim` dimensions.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self, Error> {
        SearchSpace::new(alloc::vec![lower; dim], alloc::vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn original_lower(&self) -> &[f64] {
        &self.original_lower
    }

    pub fn original_upper(&self) -> &[f64] {
        &self.original_upper
    }

    /// Replaces the current box, intersected with the original one.
    ///
    /// Each interval is clipped to the original bounds; an interval that falls
    /// entirely outside collapses onto the nearest original bound.
    pub fn with_current(&self, lower: &[f64], upper: &[f64]) -> Self {
        let mut next = self.clone();
        for d in 0..self.dim() {
            let (olo, ohi) = (self.original_lower[d], self.original_upper[d]);
            let lo = lower[d].clamp(olo, ohi);
            let hi = upper[d].clamp(olo, ohi);
            next.lower[d] = lo.min(hi);
            next.upper[d] = hi.max(lo);
        }
        next
    }

    /// Resets the current box to the original one.
    pub fn reset(&mut self) {
        self.lower.clone_from(&self.original_lower);
        self.upper.clone_from(&self.original_upper);
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// The current box lies inside the original box.
    pub fn is_nested(&self) -> bool {
        (0..self.dim()).all(|d| {
            self.original_lower[d] <= self.lower[d]
                && self.lower[d] <= self.upper[d]
                && self.upper[d] <= self.original_upper[d]
        })
    }

    /// Projects `x` onto the current box in place.
    pub fn clamp_in_place(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    /// Uniform sample `r * (upper - lower) + lower` per dimension.
    pub fn sample<R: crate::RandomStream + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| {
                let r = rng.uniform();
                // r * (hi - lo) + lo can round past hi when the box is wide
                (r * (hi - lo) + lo).min(*hi)
            })
            .collect()
    }
}

/// Saturating projection of `position` onto the current box of `space`.
pub fn clamp(position: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out = position.to_vec();
    space.clamp_in_place(&mut out);
    out
}
