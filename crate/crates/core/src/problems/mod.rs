//! The nineteen benchmark objectives: seven unimodal and six multimodal
//! functions of scalable dimension, and six fixed-dimension multimodal ones.
//!
//! Scalable functions default to 30 dimensions. A shift vector `o` moves the
//! optimum: the objective is evaluated at `z = x - o`.

mod functions;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use functions::penalty;

use crate::{Error, RandomStream, SearchSpace};

/// Benchmark function identifier, `F1` through `F19`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
}

impl FunctionId {
    pub const ALL: [FunctionId; 19] = [
        FunctionId::F1,
        FunctionId::F2,
        FunctionId::F3,
        FunctionId::F4,
        FunctionId::F5,
        FunctionId::F6,
        FunctionId::F7,
        FunctionId::F8,
        FunctionId::F9,
        FunctionId::F10,
        FunctionId::F11,
        FunctionId::F12,
        FunctionId::F13,
        FunctionId::F14,
        FunctionId::F15,
        FunctionId::F16,
        FunctionId::F17,
        FunctionId::F18,
        FunctionId::F19,
    ];

    /// 1-based function number.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn from_number(n: usize) -> Option<Self> {
        n.checked_sub(1).and_then(|i| Self::ALL.get(i).copied())
    }

    /// F1..F13 accept any dimension; F14..F19 are fixed.
    pub fn is_scalable(self) -> bool {
        self.number() <= 13
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.number())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let digits = s.strip_prefix('f').or_else(|| s.strip_prefix('F')).unwrap_or(s);
        digits
            .parse::<usize>()
            .ok()
            .and_then(FunctionId::from_number)
            .ok_or(Error::Config("unknown benchmark function"))
    }
}

/// Which shift vectors a catalog applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShiftMode {
    /// Tabulated shifts, except the ones that would put the optimum outside
    /// the search range (f6, f13), which are dropped. f10 has none.
    #[default]
    Printed,
    /// Every tabulated shift, including out-of-range ones.
    Raw,
    /// No shifts at all; every optimum sits at its canonical location.
    None,
}

impl ShiftMode {
    pub fn name(self) -> &'static str {
        match self {
            ShiftMode::Printed => "printed",
            ShiftMode::Raw => "raw",
            ShiftMode::None => "none",
        }
    }
}

impl FromStr for ShiftMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "printed" => Ok(ShiftMode::Printed),
            "raw" => Ok(ShiftMode::Raw),
            "none" => Ok(ShiftMode::None),
            _ => Err(Error::Config("shift mode must be printed, raw or none")),
        }
    }
}

/// A named objective over a uniform box.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkProblem {
    pub id: FunctionId,
    pub name: &'static str,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
    pub shift: Option<Vec<f64>>,
    /// Global minimum, when it is reachable inside the box.
    pub known_best: Option<f64>,
    pub known_best_position: Option<Vec<f64>>,
}

struct Entry {
    id: FunctionId,
    name: &'static str,
    dimension: usize,
    lower: f64,
    upper: f64,
    shift: Shift,
}

#[derive(Clone, Copy)]
enum Shift {
    None,
    Constant(f64),
    /// Tabulated but outside the range; only applied in `ShiftMode::Raw`.
    OutOfRange(f64),
    /// Tabulated as a pair; repeated across dimensions, raw mode only.
    AlternatingOutOfRange(f64, f64),
}

const SCALABLE_DIM: usize = 30;

const ENTRIES: [Entry; 19] = [
    Entry {
        id: FunctionId::F1,
        name: "Sphere",
        dimension: SCALABLE_DIM,
        lower: -100.0,
        upper: 100.0,
        shift: Shift::Constant(-30.0),
    },
    Entry {
        id: FunctionId::F2,
        name: "Schwefel 2.20",
        dimension: SCALABLE_DIM,
        lower: -10.0,
        upper: 10.0,
        shift: Shift::Constant(-3.0),
    },
    Entry {
        id: FunctionId::F3,
        name: "Rotated hyper-ellipsoid",
        dimension: SCALABLE_DIM,
        lower: -100.0,
        upper: 100.0,
        shift: Shift::Constant(-30.0),
    },
    Entry {
        id: FunctionId::F4,
        name: "Schwefel 2.21",
        dimension: SCALABLE_DIM,
        lower: -100.0,
        upper: 100.0,
        shift: Shift::Constant(-30.0),
    },
    Entry {
        id: FunctionId::F5,
        name: "Rosenbrock",
        dimension: SCALABLE_DIM,
        lower: -30.0,
        upper: 30.0,
        shift: Shift::Constant(-15.0),
    },
    Entry {
        id: FunctionId::F6,
        name: "Step",
        dimension: SCALABLE_DIM,
        lower: -100.0,
        upper: 100.0,
        shift: Shift::OutOfRange(-750.0),
    },
    Entry {
        id: FunctionId::F7,
        name: "Quartic",
        dimension: SCALABLE_DIM,
        lower: -128.0,
        upper: 128.0,
        shift: Shift::Constant(-25.0),
    },
    Entry {
        id: FunctionId::F8,
        name: "Schwefel",
        dimension: SCALABLE_DIM,
        lower: -500.0,
        upper: 500.0,
        shift: Shift::Constant(-300.0),
    },
    Entry {
        id: FunctionId::F9,
        name: "Rastrigin",
        dimension: SCALABLE_DIM,
        lower: -5.12,
        upper: 5.12,
        shift: Shift::Constant(-2.0),
    },
    Entry {
        id: FunctionId::F10,
        name: "Ackley",
        dimension: SCALABLE_DIM,
        lower: -32.0,
        upper: 32.0,
        shift: Shift::None,
    },
    Entry {
        id: FunctionId::F11,
        name: "Griewank",
        dimension: SCALABLE_DIM,
        lower: -600.0,
        upper: 600.0,
        shift: Shift::Constant(-400.0),
    },
    Entry {
        id: FunctionId::F12,
        name: "Penalized",
        dimension: SCALABLE_DIM,
        lower: -50.0,
        upper: 50.0,
        shift: Shift::Constant(-30.0),
    },
    Entry {
        id: FunctionId::F13,
        name: "Levi",
        dimension: SCALABLE_DIM,
        lower: -50.0,
        upper: 50.0,
        shift: Shift::AlternatingOutOfRange(-100.0, 100.0),
    },
    Entry {
        id: FunctionId::F14,
        name: "Shekel's foxholes",
        dimension: 2,
        lower: -65.0,
        upper: 65.0,
        shift: Shift::None,
    },
    Entry { id: FunctionId::F15, name: "Kowalik", dimension: 4, lower: -5.0, upper: 5.0, shift: Shift::None },
    Entry {
        id: FunctionId::F16,
        name: "Six-hump camel back",
        dimension: 2,
        lower: -5.0,
        upper: 5.0,
        shift: Shift::None,
    },
    Entry { id: FunctionId::F17, name: "Branin", dimension: 2, lower: -5.0, upper: 5.0, shift: Shift::None },
    Entry { id: FunctionId::F18, name: "Goldstein-Price", dimension: 2, lower: -2.0, upper: 2.0, shift: Shift::None },
    // Tabulated as [1, 3]; the Hartmann constants put every minimum in [0, 1].
    Entry { id: FunctionId::F19, name: "Hartmann 3", dimension: 3, lower: 0.0, upper: 1.0, shift: Shift::None },
];

const SCHWEFEL_ARGMIN: f64 = -420.968_748_391_906_1;
const FOXHOLES_ARGMIN: f64 = -31.978_333_541_898;
const KOWALIK_ARGMIN: [f64; 4] =
    [0.192_833_453_042_748, 0.190_836_240_275_970, 0.123_117_299_075_980, 0.135_765_990_339_845];
const CAMEL_ARGMIN: [f64; 2] = [0.089_842_016_529_271, -0.712_656_401_380_720];
const HARTMANN_ARGMIN: [f64; 3] = [0.114_614, 0.555_649, 0.852_547];

/// The full suite with tabulated shifts (dimension 30 for F1..F13).
pub fn catalog() -> Vec<BenchmarkProblem> {
    catalog_with(ShiftMode::Printed)
}

pub fn catalog_with(mode: ShiftMode) -> Vec<BenchmarkProblem> {
    ENTRIES.iter().map(|e| build(e, e.dimension, mode)).collect()
}

/// Looks up one problem of the suite.
pub fn problem(id: FunctionId, mode: ShiftMode) -> BenchmarkProblem {
    let e = &ENTRIES[id as usize];
    build(e, e.dimension, mode)
}

fn build(e: &Entry, dimension: usize, mode: ShiftMode) -> BenchmarkProblem {
    let shift = match (e.shift, mode) {
        (_, ShiftMode::None) | (Shift::None, _) => None,
        (Shift::Constant(v), _) => Some(vec![v; dimension]),
        (Shift::OutOfRange(_) | Shift::AlternatingOutOfRange(..), ShiftMode::Printed) => None,
        (Shift::OutOfRange(v), ShiftMode::Raw) => Some(vec![v; dimension]),
        (Shift::AlternatingOutOfRange(a, b), ShiftMode::Raw) => {
            Some((0..dimension).map(|d| if d % 2 == 0 { a } else { b }).collect())
        }
    };
    let mut p = BenchmarkProblem {
        id: e.id,
        name: e.name,
        dimension,
        lower: e.lower,
        upper: e.upper,
        shift,
        known_best: None,
        known_best_position: None,
    };
    p.locate_optimum();
    p
}

impl BenchmarkProblem {
    /// The same problem in `dimension` dimensions; only F1..F13 allow it.
    ///
    /// A constant shift is resized to match; any other shift is rejected.
    pub fn with_dimension(mut self, dimension: usize) -> Result<Self, Error> {
        if !self.id.is_scalable() && dimension != self.dimension {
            return Err(Error::Config("fixed-dimension functions reject a dimension override"));
        }
        let minimum = if self.id == FunctionId::F5 { 2 } else { 1 };
        if dimension < minimum {
            return Err(Error::Config("dimension too small for this function"));
        }
        if let Some(shift) = &self.shift {
            let first = shift[0];
            if shift.iter().any(|v| *v != first) {
                return Err(Error::Config("cannot resize a non-constant shift"));
            }
            self.shift = Some(vec![first; dimension]);
        }
        self.dimension = dimension;
        self.locate_optimum();
        Ok(self)
    }

    /// Replaces the shift vector.
    pub fn with_shift(mut self, shift: Option<Vec<f64>>) -> Result<Self, Error> {
        if let Some(s) = &shift {
            if s.len() != self.dimension {
                return Err(Error::DimensionMismatch { expected: self.dimension, found: s.len() });
            }
        }
        self.shift = shift;
        self.locate_optimum();
        Ok(self)
    }

    /// Replaces the box `[lower, upper]^dimension`.
    pub fn with_bounds(mut self, lower: f64, upper: f64) -> Result<Self, Error> {
        if !(lower.is_finite() && upper.is_finite() && lower < upper) {
            return Err(Error::Config("lower bound must be finite and below the upper bound"));
        }
        self.lower = lower;
        self.upper = upper;
        self.locate_optimum();
        Ok(self)
    }

    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(self.dimension, self.lower, self.upper).expect("problem bounds are valid")
    }

    /// Objective value at `x`. Only F7 consumes randomness.
    pub fn evaluate<R: RandomStream + ?Sized>(&self, x: &[f64], rng: &mut R) -> Result<f64, Error> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: x.len() });
        }
        if let Some(index) = x.iter().position(|v| v.is_nan()) {
            return Err(Error::NotANumber { index });
        }
        Ok(self.objective(x, rng))
    }

    /// Objective value without the random term of F7.
    pub fn evaluate_noise_free(&self, x: &[f64]) -> Result<f64, Error> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: x.len() });
        }
        Ok(self.raw(&self.shifted(x)))
    }

    /// Unchecked evaluation used inside the optimizers.
    pub(crate) fn objective<R: RandomStream + ?Sized>(&self, x: &[f64], rng: &mut R) -> f64 {
        let value = self.raw(&self.shifted(x));
        if self.id == FunctionId::F7 {
            value + rng.uniform()
        } else {
            value
        }
    }

    fn shifted(&self, x: &[f64]) -> Vec<f64> {
        match &self.shift {
            Some(o) => x.iter().zip(o).map(|(v, s)| v - s).collect(),
            None => x.to_vec(),
        }
    }

    fn raw(&self, z: &[f64]) -> f64 {
        use functions::*;
        match self.id {
            FunctionId::F1 => sphere(z),
            FunctionId::F2 => schwefel_2_22(z),
            FunctionId::F3 => rotated_hyper_ellipsoid(z),
            FunctionId::F4 => schwefel_2_21(z),
            FunctionId::F5 => rosenbrock(z),
            FunctionId::F6 => step(z),
            FunctionId::F7 => quartic(z),
            FunctionId::F8 => schwefel_sine(z),
            FunctionId::F9 => rastrigin(z),
            FunctionId::F10 => ackley(z),
            FunctionId::F11 => griewank(z),
            FunctionId::F12 => penalized_1(z),
            FunctionId::F13 => penalized_2(z),
            FunctionId::F14 => foxholes(z),
            FunctionId::F15 => kowalik(z),
            FunctionId::F16 => six_hump_camel(z),
            FunctionId::F17 => branin(z),
            FunctionId::F18 => goldstein_price(z),
            FunctionId::F19 => hartmann_3(z),
        }
    }

    /// Canonical minimizer in unshifted coordinates.
    fn canonical_argmin(&self) -> Vec<f64> {
        let n = self.dimension;
        match self.id {
            FunctionId::F5 | FunctionId::F13 => vec![1.0; n],
            FunctionId::F8 => vec![SCHWEFEL_ARGMIN; n],
            FunctionId::F12 => vec![-1.0; n],
            FunctionId::F14 => vec![FOXHOLES_ARGMIN; 2],
            FunctionId::F15 => KOWALIK_ARGMIN.to_vec(),
            FunctionId::F16 => CAMEL_ARGMIN.to_vec(),
            FunctionId::F17 => vec![core::f64::consts::PI, 2.275],
            FunctionId::F18 => vec![0.0, -1.0],
            FunctionId::F19 => HARTMANN_ARGMIN.to_vec(),
            _ => vec![0.0; n],
        }
    }

    fn locate_optimum(&mut self) {
        let z = self.canonical_argmin();
        let x: Vec<f64> = match &self.shift {
            Some(o) => z.iter().zip(o).map(|(v, s)| v + s).collect(),
            None => z.clone(),
        };
        if x.iter().all(|v| self.lower <= *v && *v <= self.upper) {
            self.known_best = Some(self.raw(&z));
            self.known_best_position = Some(x);
        } else {
            self.known_best = None;
            self.known_best_position = None;
        }
    }
}
