//! Coefficient tables for the fixed-dimension benchmark functions.

use std::sync::LazyLock;

/// Kowalik numerators a_i.
pub const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];

/// Kowalik reciprocal column; `b[i] = 1 / KOWALIK_B_INV[i]`.
pub const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

pub const HARTMANN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];

pub const HARTMANN3_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMANN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.038150, 0.5743, 0.8828],
];

pub const HARTMANN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.5, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];

pub const HARTMANN6_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMANN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

pub const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];

pub const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.4, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

/// The full coefficient bundle, with derived entries materialized.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub kowalik_a: [f64; 11],
    pub kowalik_b: [f64; 11],
    /// 2×25 foxholes grid: columns enumerate all 25 pairs from
    /// {−32, −16, 0, 16, 32}² in row-major order.
    pub foxholes_a: [[f64; 25]; 2],
    pub hartmann3_a: [[f64; 3]; 4],
    pub hartmann3_c: [f64; 4],
    pub hartmann3_p: [[f64; 3]; 4],
    pub hartmann6_a: [[f64; 6]; 4],
    pub hartmann6_c: [f64; 4],
    pub hartmann6_p: [[f64; 6]; 4],
    pub shekel_a: [[f64; 4]; 10],
    pub shekel_c: [f64; 10],
}

fn foxholes_grid() -> [[f64; 25]; 2] {
    let vals = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut grid = [[0.0; 25]; 2];
    for j in 0..25 {
        grid[0][j] = vals[j % 5];
        grid[1][j] = vals[j / 5];
    }
    grid
}

static TABLE: LazyLock<CoefficientTable> = LazyLock::new(|| {
    let mut kowalik_b = [0.0; 11];
    for (b, inv) in kowalik_b.iter_mut().zip(KOWALIK_B_INV) {
        *b = 1.0 / inv;
    }
    CoefficientTable {
        kowalik_a: KOWALIK_A,
        kowalik_b,
        foxholes_a: foxholes_grid(),
        hartmann3_a: HARTMANN3_A,
        hartmann3_c: HARTMANN3_C,
        hartmann3_p: HARTMANN3_P,
        hartmann6_a: HARTMANN6_A,
        hartmann6_c: HARTMANN6_C,
        hartmann6_p: HARTMANN6_P,
        shekel_a: SHEKEL_A,
        shekel_c: SHEKEL_C,
    }
});

pub fn coefficients() -> &'static CoefficientTable {
    &TABLE
}
