//! Quantum-behaved PSO: agents localize around a convex combination of
//! their personal best and the global best, with a characteristic length
//! scaled by the contraction–expansion coefficient and the mean-best
//! distance.

use super::{QpsoParams, RunContext, RunSettings, Stepper};
use crate::error::Result;
use rand::Rng;

struct Agent {
    x: Vec<f64>,
    cost: f64,
    pbest: Vec<f64>,
    pbest_cost: f64,
}

pub(crate) struct QpsoRun {
    agents: Vec<Agent>,
    params: QpsoParams,
}

/// Componentwise mean of all personal bests.
pub(crate) fn mean_best(pbests: &[&[f64]]) -> Vec<f64> {
    let dim = pbests[0].len();
    let m = pbests.len() as f64;
    (0..dim)
        .map(|j| pbests.iter().map(|p| p[j]).sum::<f64>() / m)
        .collect()
}

/// The local attractor: `φ·pbest + (1−φ)·gbest`.
fn local_attractor(phi: f64, pbest: f64, gbest: f64) -> f64 {
    phi * pbest + (1.0 - phi) * gbest
}

/// One quantum move: `p ± L·ln(1/u)`.
fn quantum_move(attractor: f64, length: f64, u: f64, plus: bool) -> f64 {
    let step = length * (1.0 / u).ln();
    if plus {
        attractor + step
    } else {
        attractor - step
    }
}

impl QpsoRun {
    pub(crate) fn new(ctx: &mut RunContext<'_>, settings: &RunSettings) -> Result<Self> {
        let mut agents = Vec::with_capacity(settings.pool_size);
        for _ in 0..settings.pool_size {
            let x: Vec<f64> = (0..ctx.dim).map(|j| ctx.uniform_in_box(j)).collect();
            let cost = ctx.evaluate(&x)?;
            ctx.offer(cost, &x, 0, false);
            agents.push(Agent {
                pbest: x.clone(),
                pbest_cost: cost,
                x,
                cost,
            });
        }
        Ok(Self {
            agents,
            params: settings.qpso,
        })
    }

    /// Linear contraction–expansion schedule over the budget.
    fn beta(&self, t: u64, t_max: u64) -> f64 {
        let p = &self.params;
        p.beta_hi - (p.beta_hi - p.beta_lo) * (t - 1) as f64 / (t_max - 1) as f64
    }
}

impl Stepper for QpsoRun {
    /// Draw order per dimension: φ, u, then the ± sign.
    #[allow(clippy::needless_range_loop)] // j indexes four parallel arrays
    fn step_agent(
        &mut self,
        ctx: &mut RunContext<'_>,
        agent: usize,
        t: u64,
        t_max: u64,
    ) -> Result<()> {
        let beta = self.beta(t, t_max);
        let mbest = {
            let pbests: Vec<&[f64]> = self.agents.iter().map(|a| a.pbest.as_slice()).collect();
            mean_best(&pbests)
        };
        let gbest = ctx.best_position.clone();
        let a = &mut self.agents[agent];
        let mut x_new = vec![0.0; ctx.dim];
        for j in 0..ctx.dim {
            let phi = ctx.open01();
            let u = ctx.open01();
            let plus = ctx.rng.random::<bool>();
            let p = local_attractor(phi, a.pbest[j], gbest[j]);
            let length = beta * (mbest[j] - a.x[j]).abs();
            let (lo, hi) = ctx.bounds[j];
            x_new[j] = quantum_move(p, length, u, plus).clamp(lo, hi);
        }
        let cost = ctx.evaluate(&x_new)?;
        if cost < a.pbest_cost {
            a.pbest_cost = cost;
            a.pbest.copy_from_slice(&x_new);
        }
        a.x = x_new;
        a.cost = cost;
        ctx.offer(cost, &self.agents[agent].x, t, true);
        Ok(())
    }
}
