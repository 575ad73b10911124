//! Canonical and damped-inertia particle swarm baselines.

use super::{PsoParams, RunContext, RunSettings, Stepper};
use crate::error::Result;
use rand::Rng;

struct Agent {
    x: Vec<f64>,
    v: Vec<f64>,
    cost: f64,
    pbest: Vec<f64>,
    pbest_cost: f64,
}

pub(crate) struct PsoRun {
    agents: Vec<Agent>,
    params: PsoParams,
    w: f64,
    v_max: Vec<f64>,
}

impl PsoRun {
    pub(crate) fn new(
        ctx: &mut RunContext<'_>,
        settings: &RunSettings,
        params: PsoParams,
    ) -> Result<Self> {
        let v_max: Vec<f64> = ctx
            .bounds
            .iter()
            .map(|(lo, hi)| params.v_max_fraction * (hi - lo))
            .collect();
        let mut agents = Vec::with_capacity(settings.pool_size);
        for _ in 0..settings.pool_size {
            let x: Vec<f64> = (0..ctx.dim).map(|j| ctx.uniform_in_box(j)).collect();
            let cost = ctx.evaluate(&x)?;
            ctx.offer(cost, &x, 0, false);
            agents.push(Agent {
                v: vec![0.0; ctx.dim],
                pbest: x.clone(),
                pbest_cost: cost,
                x,
                cost,
            });
        }
        Ok(Self {
            agents,
            params,
            w: params.w0,
            v_max,
        })
    }

    #[cfg(test)]
    fn inertia(&self) -> f64 {
        self.w
    }
}

impl Stepper for PsoRun {
    /// Draw order per dimension: the cognitive noise u1, then the social
    /// noise u2.
    #[allow(clippy::needless_range_loop)] // j indexes five parallel arrays
    fn step_agent(
        &mut self,
        ctx: &mut RunContext<'_>,
        agent: usize,
        t: u64,
        _t_max: u64,
    ) -> Result<()> {
        let gbest = ctx.best_position.clone();
        let a = &mut self.agents[agent];
        for j in 0..ctx.dim {
            let u1: f64 = ctx.rng.random();
            let u2: f64 = ctx.rng.random();
            let v = self.w * a.v[j]
                + self.params.c1 * u1 * (a.pbest[j] - a.x[j])
                + self.params.c2 * u2 * (gbest[j] - a.x[j]);
            a.v[j] = v.clamp(-self.v_max[j], self.v_max[j]);
            let (lo, hi) = ctx.bounds[j];
            a.x[j] = (a.x[j] + a.v[j]).clamp(lo, hi);
        }
        let x_new = a.x.clone();
        let cost = ctx.evaluate(&x_new)?;
        let a = &mut self.agents[agent];
        a.cost = cost;
        if cost < a.pbest_cost {
            a.pbest_cost = cost;
            a.pbest.copy_from_slice(&x_new);
        }
        ctx.offer(cost, &x_new, t, true);
        Ok(())
    }

    /// Inertia damping is applied once per iteration, after the update(s).
    fn end_iteration(&mut self) {
        self.w *= self.params.damping;
    }
}
