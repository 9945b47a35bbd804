//! Objective formulas on already-shifted coordinates.

use core::f64::consts::{E, PI};

use libm::{cos, exp, fabs, floor, pow, sin, sqrt};

pub fn sphere(z: &[f64]) -> f64 {
    z.iter().map(|v| v * v).sum()
}

/// Schwefel 2.22: sum plus product of absolute values.
pub fn schwefel_2_22(z: &[f64]) -> f64 {
    let sum: f64 = z.iter().map(|v| fabs(*v)).sum();
    let prod: f64 = z.iter().map(|v| fabs(*v)).product();
    sum + prod
}

/// Sum of squared prefix sums.
pub fn rotated_hyper_ellipsoid(z: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in z {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

/// Schwefel 2.21: largest absolute coordinate.
pub fn schwefel_2_21(z: &[f64]) -> f64 {
    z.iter().fold(0.0, |m, v| f64::max(m, fabs(*v)))
}

pub fn rosenbrock(z: &[f64]) -> f64 {
    z.windows(2)
        .map(|w| {
            let a = w[1] - w[0] * w[0];
            let b = w[0] - 1.0;
            100.0 * a * a + b * b
        })
        .sum()
}

pub fn step(z: &[f64]) -> f64 {
    z.iter()
        .map(|v| {
            let r = floor(v + 0.5);
            r * r
        })
        .sum()
}

/// Deterministic part of the noisy quartic.
pub fn quartic(z: &[f64]) -> f64 {
    z.iter()
        .enumerate()
        .map(|(i, v)| {
            let sq = v * v;
            (i + 1) as f64 * sq * sq
        })
        .sum()
}

/// Signed Schwefel sum, minimized toward large negative values.
pub fn schwefel_sine(z: &[f64]) -> f64 {
    z.iter().map(|v| v * sin(sqrt(fabs(*v)))).sum()
}

pub fn rastrigin(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    10.0 * n + z.iter().map(|v| v * v - 10.0 * cos(2.0 * PI * v)).sum::<f64>()
}

pub fn ackley(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let sq: f64 = z.iter().map(|v| v * v).sum();
    let cs: f64 = z.iter().map(|v| cos(2.0 * PI * v)).sum();
    -20.0 * exp(-0.2 * sqrt(sq / n)) - exp(cs / n) + 20.0 + E
}

pub fn griewank(z: &[f64]) -> f64 {
    let sq: f64 = z.iter().map(|v| v * v).sum();
    let prod: f64 = z.iter().enumerate().map(|(i, v)| cos(v / sqrt((i + 1) as f64))).product();
    1.0 + sq / 4000.0 - prod
}

/// Boundary penalty `u(x, a, k, m)`.
pub fn penalty(x: f64, a: f64, k: f64, m: f64) -> f64 {
    if x > a {
        k * pow(x - a, m)
    } else if x < -a {
        k * pow(-x - a, m)
    } else {
        0.0
    }
}

fn sin_sq(v: f64) -> f64 {
    let s = sin(v);
    s * s
}

pub fn penalized_1(z: &[f64]) -> f64 {
    let n = z.len();
    let y = |i: usize| 1.0 + (z[i] + 1.0) / 4.0;
    let mut inner = 10.0 * sin_sq(PI * y(0));
    for i in 0..n - 1 {
        let a = y(i) - 1.0;
        inner += a * a * (1.0 + 10.0 * sin_sq(PI * y(i + 1)));
    }
    let last = y(n - 1) - 1.0;
    inner += last * last;
    PI / n as f64 * inner + z.iter().map(|v| penalty(*v, 10.0, 100.0, 4.0)).sum::<f64>()
}

pub fn penalized_2(z: &[f64]) -> f64 {
    let n = z.len();
    let mut inner = sin_sq(3.0 * PI * z[0]);
    for i in 0..n - 1 {
        let a = z[i] - 1.0;
        inner += a * a * (1.0 + sin_sq(3.0 * PI * z[i + 1]));
    }
    let last = z[n - 1] - 1.0;
    inner += last * last * (1.0 + sin_sq(2.0 * PI * z[n - 1]));
    0.1 * inner + z.iter().map(|v| penalty(*v, 5.0, 100.0, 4.0)).sum::<f64>()
}

const FOXHOLE_GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

/// Shekel's foxholes.
pub fn foxholes(x: &[f64]) -> f64 {
    let mut sum = 1.0 / 500.0;
    for j in 0..25 {
        let a1 = FOXHOLE_GRID[j % 5];
        let a2 = FOXHOLE_GRID[j / 5];
        sum += 1.0 / ((j + 1) as f64 + pow(x[0] - a1, 6.0) + pow(x[1] - a2, 6.0));
    }
    1.0 / sum
}

const KOWALIK_A: [f64; 11] = [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246];
const KOWALIK_INV_B: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

pub fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_INV_B)
        .map(|(a, inv_b)| {
            let b = 1.0 / inv_b;
            let r = a - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            r * r
        })
        .sum()
}

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let a2 = a * a;
    let b2 = b * b;
    4.0 * a2 - 2.1 * a2 * a2 + a2 * a2 * a2 / 3.0 + a * b - 4.0 * b2 + 4.0 * b2 * b2
}

pub fn branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let t = b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0;
    t * t + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * cos(a) + 10.0
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let s = a + b + 1.0;
    let left = 1.0 + s * s * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let d = 2.0 * a - 3.0 * b;
    let right = 30.0 + d * d * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    left * right
}

const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN_A: [[f64; 3]; 4] = [[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]];
const HARTMANN_P: [[f64; 3]; 4] =
    [[0.3689, 0.1170, 0.2673], [0.4699, 0.4387, 0.7470], [0.1091, 0.8732, 0.5547], [0.03815, 0.5743, 0.8828]];

pub fn hartmann_3(x: &[f64]) -> f64 {
    -(0..4)
        .map(|i| {
            let e: f64 = (0..3)
                .map(|j| {
                    let d = x[j] - HARTMANN_P[i][j];
                    HARTMANN_A[i][j] * d * d
                })
                .sum();
            HARTMANN_C[i] * exp(-e)
        })
        .sum::<f64>()
}
