//! The optimizer family behind one seeded, deterministic interface.
//!
//! All algorithms share the experimental protocol: a pool of agents is
//! initialized over the search box, then each iteration updates a single
//! uniformly chosen agent and consumes exactly one objective evaluation
//! (a config switch enables classical full-swarm sweeps instead). The
//! global best is updated only on strict improvement, which makes the
//! best-cost series monotonically non-increasing; this is asserted on
//! every iteration.

mod cqdds;
mod pso;
mod qpso;

use crate::bench::{FunctionId, ObjectiveSpec};
use crate::delta::DeltaParams;
use crate::error::{Error, Result};
use crate::rng::stream;
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Number of agents in the pool.
pub const DEFAULT_POOL_SIZE: usize = 50;

/// Stable algorithm identifiers. The last five are external references
/// exposed for fixture data only; running them is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgorithmId {
    Cqdds,
    QddsUniform,
    Qpso,
    PsoDamped,
    PsoCanonical,
    Sca,
    Dfa,
    Alo,
    Woa,
    Fa,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 10] = [
        AlgorithmId::Cqdds,
        AlgorithmId::QddsUniform,
        AlgorithmId::Qpso,
        AlgorithmId::PsoDamped,
        AlgorithmId::PsoCanonical,
        AlgorithmId::Sca,
        AlgorithmId::Dfa,
        AlgorithmId::Alo,
        AlgorithmId::Woa,
        AlgorithmId::Fa,
    ];

    /// The algorithms implemented natively by this crate.
    pub const NATIVE: [AlgorithmId; 5] = [
        AlgorithmId::Cqdds,
        AlgorithmId::QddsUniform,
        AlgorithmId::Qpso,
        AlgorithmId::PsoDamped,
        AlgorithmId::PsoCanonical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmId::Cqdds => "cqdds",
            AlgorithmId::QddsUniform => "qdds-uniform",
            AlgorithmId::Qpso => "qpso",
            AlgorithmId::PsoDamped => "pso-damped",
            AlgorithmId::PsoCanonical => "pso-canonical",
            AlgorithmId::Sca => "sca",
            AlgorithmId::Dfa => "dfa",
            AlgorithmId::Alo => "alo",
            AlgorithmId::Woa => "woa",
            AlgorithmId::Fa => "fa",
        }
    }

    pub fn is_native(self) -> bool {
        Self::NATIVE.contains(&self)
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// How many agents move per iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SwarmMode {
    /// One uniformly chosen agent per iteration (the reported protocol).
    OneAgent,
    /// Classical synchronous sweep over the whole pool.
    FullSwarm,
}

impl SwarmMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SwarmMode::OneAgent => "one-agent",
            SwarmMode::FullSwarm => "full-swarm",
        }
    }
}

impl FromStr for SwarmMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one-agent" => Ok(SwarmMode::OneAgent),
            "full-swarm" => Ok(SwarmMode::FullSwarm),
            other => Err(Error::InvalidParam(format!(
                "swarm mode must be one-agent or full-swarm, got `{other}`"
            ))),
        }
    }
}

/// PSO coefficients; conventional defaults, recorded here so runs are
/// auditable.
#[derive(Debug, Clone, Copy)]
pub struct PsoParams {
    pub w0: f64,
    /// Per-iteration inertia multiplier: 0.95 for the damped variant, 1.0
    /// for the canonical one.
    pub damping: f64,
    pub c1: f64,
    pub c2: f64,
    /// Velocity clamp as a fraction of the box width.
    pub v_max_fraction: f64,
}

impl PsoParams {
    pub fn canonical() -> Self {
        Self {
            w0: 0.9,
            damping: 1.0,
            c1: 2.0,
            c2: 2.0,
            v_max_fraction: 0.2,
        }
    }

    pub fn damped() -> Self {
        Self {
            damping: 0.95,
            ..Self::canonical()
        }
    }
}

/// QPSO contraction–expansion schedule endpoints.
#[derive(Debug, Clone, Copy)]
pub struct QpsoParams {
    pub beta_hi: f64,
    pub beta_lo: f64,
}

impl Default for QpsoParams {
    fn default() -> Self {
        Self {
            beta_hi: 1.0,
            beta_lo: 0.5,
        }
    }
}

/// Run-level knobs shared by the whole family.
#[derive(Debug, Clone, Copy)]
pub struct RunSettings {
    pub pool_size: usize,
    pub swarm_mode: SwarmMode,
    /// Initial Chebyshev weight for C-QDDS.
    pub rho0: f64,
    pub qpso: QpsoParams,
    pub pso_base: PsoParams,
}

impl Default for RunSettings {
    fn default() -> Self {
        Self {
            pool_size: DEFAULT_POOL_SIZE,
            swarm_mode: SwarmMode::OneAgent,
            rho0: crate::chaos::DEFAULT_RHO0,
            qpso: QpsoParams::default(),
            pso_base: PsoParams::canonical(),
        }
    }
}

/// A global-best improvement event; `x1`/`x2` are the first two components
/// of the best position.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub iteration: u64,
    pub cost: f64,
    pub x1: f64,
    pub x2: f64,
}

/// Outcome of one seeded run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunResult {
    pub algorithm: AlgorithmId,
    pub function: FunctionId,
    pub dim: usize,
    pub seed: u64,
    pub best_cost: f64,
    pub best_position: Vec<f64>,
    /// Objective evaluations consumed in total, initialization included.
    pub evaluations: u64,
    /// Evaluations spent on pool initialization.
    pub init_evaluations: u64,
    /// Improvement events; the first entry is the post-initialization best.
    pub trajectory: Vec<TrajectoryPoint>,
}

/// Shared bookkeeping for one run: the seeded stream, the incumbent and
/// the improvement trajectory. Single-writer; one instance per run.
pub(crate) struct RunContext<'a> {
    pub spec: &'a ObjectiveSpec,
    pub dim: usize,
    pub bounds: Vec<(f64, f64)>,
    pub rng: ChaCha12Rng,
    pub best_cost: f64,
    pub best_position: Vec<f64>,
    pub evaluations: u64,
    pub trajectory: Vec<TrajectoryPoint>,
}

impl<'a> RunContext<'a> {
    fn new(spec: &'a ObjectiveSpec, dim: usize, rng: ChaCha12Rng) -> Self {
        Self {
            spec,
            dim,
            bounds: spec.bounds(dim),
            rng,
            best_cost: f64::INFINITY,
            best_position: vec![f64::NAN; dim],
            evaluations: 0,
            trajectory: Vec::new(),
        }
    }

    /// Evaluates a position, asserting it lies inside the box.
    pub fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        for (v, (lo, hi)) in x.iter().zip(&self.bounds) {
            assert!(
                *v >= *lo && *v <= *hi,
                "position component {v} escaped the box [{lo}, {hi}]"
            );
        }
        let rng = &mut self.rng;
        let cost = self.spec.evaluate_with(x, &mut || rng.random::<f64>())?;
        self.evaluations += 1;
        Ok(cost)
    }

    /// Strict-improvement update of the incumbent; records a trajectory
    /// point unless `record` is false (pool initialization).
    pub fn offer(&mut self, cost: f64, x: &[f64], iteration: u64, record: bool) -> bool {
        if cost < self.best_cost {
            self.best_cost = cost;
            self.best_position.copy_from_slice(x);
            if record {
                self.push_trajectory(iteration);
            }
            true
        } else {
            false
        }
    }

    pub fn push_trajectory(&mut self, iteration: u64) {
        self.trajectory.push(TrajectoryPoint {
            iteration,
            cost: self.best_cost,
            x1: self.best_position[0],
            x2: self.best_position[1],
        });
    }

    pub fn uniform_in_box(&mut self, j: usize) -> f64 {
        let (lo, hi) = self.bounds[j];
        self.rng.random_range(lo..=hi)
    }

    /// Uniform draw from the open interval (0, 1).
    pub fn open01(&mut self) -> f64 {
        loop {
            let u: f64 = self.rng.random();
            if u > 0.0 {
                return u;
            }
        }
    }

    fn finish(self, algorithm: AlgorithmId, seed: u64, init_evaluations: u64) -> RunResult {
        debug_assert!(self.trajectory.windows(2).all(|w| w[1].cost < w[0].cost));
        debug_assert_eq!(self.trajectory.last().map(|p| p.cost), Some(self.best_cost));
        RunResult {
            algorithm,
            function: self.spec.id,
            dim: self.dim,
            seed,
            best_cost: self.best_cost,
            best_position: self.best_position,
            evaluations: self.evaluations,
            init_evaluations,
            trajectory: self.trajectory,
        }
    }
}

/// Executes one seeded run. Deterministic for a fixed
/// `(algorithm, function, dim, iterations, seed, settings)` tuple.
pub fn run(
    algorithm: AlgorithmId,
    spec: &ObjectiveSpec,
    dim: Option<usize>,
    iterations: u64,
    seed: u64,
    settings: &RunSettings,
) -> Result<RunResult> {
    if !algorithm.is_native() {
        return Err(Error::ExternalAlgorithm(algorithm.as_str()));
    }
    if iterations < 3 {
        return Err(Error::InvalidParam(format!(
            "budget must be at least 3 iterations, got {iterations}"
        )));
    }
    if settings.pool_size == 0 {
        return Err(Error::InvalidParam("pool size must be positive".into()));
    }
    let dim = spec.resolve_dim(dim)?;
    if dim < 2 {
        return Err(Error::InvalidParam(format!(
            "runs need at least 2 dimensions, got {dim}"
        )));
    }

    let mut ctx = RunContext::new(spec, dim, stream(seed));
    let mut driver: Box<dyn Stepper> = match algorithm {
        AlgorithmId::Cqdds => {
            let params = DeltaParams::draw(&mut ctx.rng);
            Box::new(cqdds::CqddsRun::new(
                &mut ctx,
                params,
                settings,
                cqdds::WeightKind::Chebyshev,
            )?)
        }
        AlgorithmId::QddsUniform => {
            let params = DeltaParams::draw(&mut ctx.rng);
            Box::new(cqdds::CqddsRun::new(
                &mut ctx,
                params,
                settings,
                cqdds::WeightKind::Uniform,
            )?)
        }
        AlgorithmId::Qpso => Box::new(qpso::QpsoRun::new(&mut ctx, settings)?),
        AlgorithmId::PsoDamped => {
            Box::new(pso::PsoRun::new(&mut ctx, settings, PsoParams::damped())?)
        }
        AlgorithmId::PsoCanonical => Box::new(pso::PsoRun::new(
            &mut ctx,
            settings,
            PsoParams::canonical(),
        )?),
        _ => unreachable!("non-native algorithms rejected above"),
    };
    let init_evaluations = ctx.evaluations;
    ctx.push_trajectory(0);

    for t in 1..=iterations {
        let before = ctx.best_cost;
        match settings.swarm_mode {
            SwarmMode::OneAgent => {
                let idx = ctx.rng.random_range(0..settings.pool_size);
                driver.step_agent(&mut ctx, idx, t, iterations)?;
            }
            SwarmMode::FullSwarm => {
                for idx in 0..settings.pool_size {
                    driver.step_agent(&mut ctx, idx, t, iterations)?;
                }
            }
        }
        driver.end_iteration();
        assert!(
            ctx.best_cost <= before,
            "best cost increased from {before} to {} at iteration {t}",
            ctx.best_cost
        );
    }

    Ok(ctx.finish(algorithm, seed, init_evaluations))
}

/// One pool-agent update. Implementations draw from the context's stream in
/// a fixed documented order so runs stay reproducible.
pub(crate) trait Stepper {
    fn step_agent(
        &mut self,
        ctx: &mut RunContext<'_>,
        agent: usize,
        t: u64,
        t_max: u64,
    ) -> Result<()>;

    /// Per-iteration parameter updates (inertia damping).
    fn end_iteration(&mut self) {}
}
