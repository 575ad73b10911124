//! Evaluators for the 23 benchmark functions.
//!
//! All evaluators are total on finite inputs and dimension-checked by the
//! caller. F7 adds one uniform [0, 1) noise draw per evaluation, pulled
//! from a caller-supplied source.

use super::coeffs::coefficients;
use std::f64::consts::{E, PI};

/// F1 Sphere.
pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// F2 Schwefel 2.22: sum plus product of absolute coordinates.
pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

/// F3 Schwefel 1.2: squared prefix sums.
pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

/// F4 Schwefel 2.21: largest absolute coordinate.
pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// F5 generalized Rosenbrock.
pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// F6 step function, unique minimum at the −0.5 vector.
pub fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5) * (v + 0.5)).sum()
}

/// F7 quartic with additive noise; one uniform [0, 1) draw per evaluation.
pub fn quartic_noise(x: &[f64], noise: &mut dyn FnMut() -> f64) -> f64 {
    let quartic: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum();
    quartic + noise()
}

/// F8 generalized Schwefel 2.26.
pub fn schwefel_2_26(x: &[f64]) -> f64 {
    -x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

/// F9 generalized Rastrigin, A = 10.
pub fn rastrigin(x: &[f64]) -> f64 {
    const A: f64 = 10.0;
    A * x.len() as f64
        + x.iter()
            .map(|v| v * v - A * (2.0 * PI * v).cos())
            .sum::<f64>()
}

/// F10 Ackley.
pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sum_sq: f64 = x.iter().map(|v| v * v).sum();
    let sum_cos: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sum_sq / n).sqrt()).exp() - (sum_cos / n).exp() + 20.0 + E
}

/// F11 generalized Griewank.
pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum();
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    1.0 + sum / 4000.0 - prod
}

/// Penalty term u(x, a, k, m): zero inside [−a, a], polynomial outside.
pub fn penalty_u(x: f64, a: f64, k: f64, m: f64) -> f64 {
    debug_assert!(a > 0.0 && k > 0.0 && m > 0.0);
    if x > a {
        k * (x - a).powf(m)
    } else if x < -a {
        k * (-x - a).powf(m)
    } else {
        0.0
    }
}

/// The y substitution of the first penalized function.
pub fn penalized_y(x: f64) -> f64 {
    1.0 + (x + 1.0) / 4.0
}

/// F12 generalized penalized function 1, with u(x, 10, 100, 4).
pub fn penalized_1(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|&v| penalized_y(v)).collect();
    let mut core = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        core += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    core += (y[n - 1] - 1.0).powi(2);
    let penalty: f64 = x.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4.0)).sum();
    PI / n as f64 * core + penalty
}

/// F13 generalized penalized function 2, with u(x, 5, 100, 4).
pub fn penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut core = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        core += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    core += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    let penalty: f64 = x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum();
    0.1 * core + penalty
}

/// F14 Shekel's foxholes (2-D).
pub fn foxholes(x: &[f64]) -> f64 {
    let a = &coefficients().foxholes_a;
    let mut sum = 1.0 / 500.0;
    for (j, (&a1, &a2)) in a[0].iter().zip(&a[1]).enumerate() {
        let dj = (x[0] - a1).powi(6) + (x[1] - a2).powi(6);
        sum += 1.0 / ((j + 1) as f64 + dj);
    }
    1.0 / sum
}

/// F15 Kowalik (4-D).
pub fn kowalik(x: &[f64]) -> f64 {
    let t = coefficients();
    let mut total = 0.0;
    for i in 0..11 {
        let b = t.kowalik_b[i];
        let num = x[0] * (b * b + b * x[1]);
        let den = b * b + b * x[2] + x[3];
        let r = t.kowalik_a[i] - num / den;
        total += r * r;
    }
    total
}

/// F16 six-hump camel-back (2-D).
pub fn camel_back(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    4.0 * x1.powi(2) - 2.1 * x1.powi(4) + x1.powi(6) / 3.0 + x1 * x2 - 4.0 * x2.powi(2)
        + 4.0 * x2.powi(4)
}

/// F17 Branin (2-D).
pub fn branin(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    (x2 - 5.1 * x1 * x1 / (4.0 * PI * PI) + 5.0 * x1 / PI - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * x1.cos()
        + 10.0
}

/// F18 Goldstein–Price (2-D).
pub fn goldstein_price(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let a = 1.0
        + (x1 + x2 + 1.0).powi(2)
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let b = 30.0
        + (2.0 * x1 - 3.0 * x2).powi(2)
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    a * b
}

/// F19 Hartmann 3-D.
pub fn hartmann3(x: &[f64]) -> f64 {
    let t = coefficients();
    hartmann(x, &t.hartmann3_a, &t.hartmann3_c, &t.hartmann3_p)
}

/// F20 Hartmann 6-D.
pub fn hartmann6(x: &[f64]) -> f64 {
    let t = coefficients();
    hartmann(x, &t.hartmann6_a, &t.hartmann6_c, &t.hartmann6_p)
}

fn hartmann<const D: usize>(x: &[f64], a: &[[f64; D]; 4], c: &[f64; 4], p: &[[f64; D]; 4]) -> f64 {
    let mut total = 0.0;
    for i in 0..4 {
        let mut inner = 0.0;
        for j in 0..D {
            inner += a[i][j] * (x[j] - p[i][j]).powi(2);
        }
        total -= c[i] * (-inner).exp();
    }
    total
}

/// F21–F23 Shekel family (4-D), with the first `m` rows of the table.
pub fn shekel(x: &[f64], m: usize) -> f64 {
    let t = coefficients();
    let mut total = 0.0;
    for i in 0..m {
        let dist: f64 = (0..4).map(|j| (x[j] - t.shekel_a[i][j]).powi(2)).sum();
        total -= 1.0 / (dist + t.shekel_c[i]);
    }
    total
}
