//! Chebyshev chaotic weight source.
//!
//! The recurrence `ρ_t = cos(t · arccos(ρ_{t−1}))` with a growing iteration
//! multiplier produces an ergodic, non-repeating weight sequence. Raw values
//! lie in [−1, 1]; they are folded by absolute value into the [0, 1] range
//! required by the convex solution blend, which preserves the chaotic orbit
//! structure. Orbits trapped at the `|ρ| = 1` fixed point (where every
//! subsequent iterate would stay 1) are reseeded uniformly from
//! (0.05, 0.95).

use crate::error::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha12Rng;

/// Default initial weight; any non-degenerate interior point works.
pub const DEFAULT_RHO0: f64 = 0.7;

const FIXED_POINT_EPS: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct ChebyshevState {
    rho: f64,
    t: u64,
    reseed_count: u64,
    stream: ChaCha12Rng,
}

impl ChebyshevState {
    /// Starts the orbit at `rho0 ∈ (0, 1)` with the iteration multiplier at 1.
    pub fn init(stream: ChaCha12Rng, rho0: f64) -> Result<Self> {
        if !rho0.is_finite() || rho0 <= 0.0 || rho0 >= 1.0 {
            return Err(Error::InvalidParam(format!(
                "initial Chebyshev weight must lie strictly inside (0, 1), got {rho0}"
            )));
        }
        Ok(Self {
            rho: rho0,
            t: 1,
            reseed_count: 0,
            stream,
        })
    }

    /// Current weight ρ.
    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Iteration multiplier used by the next advance.
    pub fn t(&self) -> u64 {
        self.t
    }

    /// Number of degenerate-orbit reseeds so far.
    pub fn reseed_count(&self) -> u64 {
        self.reseed_count
    }

    /// Advances the orbit and returns the folded weight in [0, 1].
    ///
    /// If the folded value sits at the fixed point (≥ 1 − 1e−12) the stored
    /// state is reseeded from (0.05, 0.95) so the orbit cannot freeze; the
    /// degenerate value itself is still the one returned for this advance.
    pub fn next_weight(&mut self) -> f64 {
        let raw = ((self.t as f64) * self.rho.acos()).cos();
        let folded = raw.abs();
        self.rho = folded;
        self.t += 1;
        if folded >= 1.0 - FIXED_POINT_EPS {
            self.rho = self.stream.random_range(0.05..0.95);
            self.reseed_count += 1;
        }
        folded
    }
}

/// Deterministic weight sequence for a fixed `(seed, rho0, n)`.
pub fn sample_sequence_with(seed: u64, rho0: f64, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidParam("sequence length must be >= 1".into()));
    }
    let mut state = ChebyshevState::init(crate::rng::stream(seed), rho0)?;
    Ok((0..n).map(|_| state.next_weight()).collect())
}

/// [`sample_sequence_with`] at the default ρ₀.
pub fn sample_sequence(seed: u64, n: usize) -> Result<Vec<f64>> {
    sample_sequence_with(seed, DEFAULT_RHO0, n)
}
