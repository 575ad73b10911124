//! The seeded trial matrix: independent runs distributed over a worker
//! pool, with results keyed so scheduling never affects the record set.

use super::config::ExperimentConfig;
use crate::bench::FunctionId;
use crate::error::{Error, Result};
use crate::optimizers::{run, AlgorithmId, RunResult, RunSettings};
use crate::rng::sub_seed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::time::Instant;

/// One completed trial. `wall_time_ms` is informational only and excluded
/// from determinism-checked outputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialRecord {
    pub algorithm: AlgorithmId,
    pub function: FunctionId,
    pub dim: usize,
    pub trial: u32,
    pub sub_seed: u64,
    pub best_cost: f64,
    pub best_position: Vec<f64>,
    pub evaluations: u64,
    #[serde(skip)]
    pub wall_time_ms: u64,
}

impl TrialRecord {
    pub fn from_run(result: &RunResult, trial: u32, wall_time_ms: u64) -> Self {
        Self {
            algorithm: result.algorithm,
            function: result.function,
            dim: result.dim,
            trial,
            sub_seed: result.seed,
            best_cost: result.best_cost,
            best_position: result.best_position.clone(),
            evaluations: result.evaluations,
            wall_time_ms,
        }
    }
}

/// Executes one cell of the matrix.
pub fn run_trial(
    algorithm: AlgorithmId,
    function: FunctionId,
    config: &ExperimentConfig,
    trial: u32,
) -> Result<RunResult> {
    let seed = sub_seed(
        config.master_seed,
        algorithm.as_str(),
        function.as_str(),
        trial,
    );
    let spec = function.spec();
    let dim = match spec.dim_rule {
        crate::bench::DimRule::Variable { .. } => Some(config.dim),
        crate::bench::DimRule::Fixed(_) => None,
    };
    let settings = RunSettings {
        swarm_mode: config.swarm_mode,
        ..RunSettings::default()
    };
    run(algorithm, spec, dim, config.iterations, seed, &settings)
}

/// Runs `trials × algorithms × functions` independent trials on a pool of
/// `config.workers` threads and returns the records in canonical order.
pub fn run_matrix(config: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;

    let mut jobs = Vec::new();
    let mut seeds = HashSet::new();
    for &algorithm in &config.algorithms {
        for &function in &config.functions {
            for trial in 0..config.trials {
                let seed = sub_seed(
                    config.master_seed,
                    algorithm.as_str(),
                    function.as_str(),
                    trial,
                );
                if !seeds.insert(seed) {
                    return Err(Error::InvalidParam(format!(
                        "sub-seed collision at ({algorithm}, {function}, trial {trial})"
                    )));
                }
                jobs.push((algorithm, function, trial));
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidParam(format!("worker pool: {e}")))?;

    let mut records = pool.install(|| {
        jobs.par_iter()
            .map(|&(algorithm, function, trial)| {
                let started = Instant::now();
                let result = run_trial(algorithm, function, config, trial)?;
                let wall = started.elapsed().as_millis() as u64;
                Ok(TrialRecord::from_run(&result, trial, wall))
            })
            .collect::<Result<Vec<_>>>()
    })?;

    super::io::canonical_sort(&mut records);
    Ok(records)
}
