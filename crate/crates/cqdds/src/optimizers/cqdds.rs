//! The double-delta swarm update: gradient-band corrected δ dynamics in
//! internal coordinates, blended toward the global best by a chaotic (or,
//! for the ablation, uniform) weight.

use super::{RunContext, RunSettings, Stepper};
use crate::chaos::ChebyshevState;
use crate::delta::{
    corrected_delta, delta_of_r, from_internal, invert_delta, DeltaHistory, DeltaParams,
};
use crate::error::Result;
use rand::Rng;
use rand_chacha::rand_core::RngCore;
use rand_chacha::ChaCha12Rng;

/// Which weight source drives the solution blend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum WeightKind {
    /// Chebyshev chaotic map (C-QDDS).
    Chebyshev,
    /// Uniform(0, 1) ablation.
    Uniform,
}

#[allow(clippy::large_enum_variant)] // one instance per run
enum WeightSource {
    Chebyshev(ChebyshevState),
    Uniform,
    #[cfg(test)]
    Fixed(f64),
}

impl WeightSource {
    fn next(&mut self, rng: &mut ChaCha12Rng) -> f64 {
        match self {
            WeightSource::Chebyshev(state) => state.next_weight(),
            WeightSource::Uniform => rng.random::<f64>(),
            #[cfg(test)]
            WeightSource::Fixed(w) => *w,
        }
    }
}

/// One agent: internal-coordinate position, per-dimension δ history and
/// cached cost/position.
struct Agent {
    r: Vec<f64>,
    hist: DeltaHistory,
    cost: f64,
    position: Vec<f64>,
}

pub(crate) struct CqddsRun {
    agents: Vec<Agent>,
    params: DeltaParams,
    weights: WeightSource,
    /// Global best in internal coordinates, kept in lockstep with the
    /// context's incumbent.
    best_r: Vec<f64>,
}

impl CqddsRun {
    /// Initializes the pool with two warm-up position draws per agent; the
    /// warm-up seeds the (δ_{t−1}, δ_{t−2}) history and both draws count
    /// toward the initial global best.
    pub(crate) fn new(
        ctx: &mut RunContext<'_>,
        params: DeltaParams,
        settings: &RunSettings,
        kind: WeightKind,
    ) -> Result<Self> {
        let weights = match kind {
            WeightKind::Chebyshev => {
                let fork = crate::rng::stream(ctx.rng.next_u64());
                WeightSource::Chebyshev(ChebyshevState::init(fork, settings.rho0)?)
            }
            WeightKind::Uniform => WeightSource::Uniform,
        };
        let mut run = Self {
            agents: Vec::with_capacity(settings.pool_size),
            params,
            weights,
            best_r: vec![f64::NAN; ctx.dim],
        };
        for _ in 0..settings.pool_size {
            let (r1, pos1) = run.draw_position(ctx);
            let cost1 = ctx.evaluate(&pos1)?;
            if ctx.offer(cost1, &pos1, 0, false) {
                run.best_r.copy_from_slice(&r1);
            }
            let (r2, pos2) = run.draw_position(ctx);
            let cost2 = ctx.evaluate(&pos2)?;
            if ctx.offer(cost2, &pos2, 0, false) {
                run.best_r.copy_from_slice(&r2);
            }
            let prev2: Vec<f64> = r1
                .iter()
                .map(|&r| delta_of_r(r, params.k).expect("warm-up r in domain"))
                .collect();
            let prev: Vec<f64> = r2
                .iter()
                .map(|&r| delta_of_r(r, params.k).expect("warm-up r in domain"))
                .collect();
            run.agents.push(Agent {
                r: r2,
                hist: DeltaHistory { prev, prev2 },
                cost: cost2,
                position: pos2,
            });
        }
        Ok(run)
    }

    fn draw_position(&self, ctx: &mut RunContext<'_>) -> (Vec<f64>, Vec<f64>) {
        let r: Vec<f64> = (0..ctx.dim)
            .map(|_| {
                ctx.rng
                    .random_range(self.params.r_floor..=self.params.r_ceil)
            })
            .collect();
        let position = self.materialize(ctx, &r);
        (r, position)
    }

    /// Internal coordinates back to the search box, clamped against
    /// floating-point spill at the box faces.
    fn materialize(&self, ctx: &RunContext<'_>, r: &[f64]) -> Vec<f64> {
        r.iter()
            .zip(&ctx.bounds)
            .map(|(&ri, &(lo, hi))| from_internal(ri, lo, hi).clamp(lo, hi))
            .collect()
    }
}

impl Stepper for CqddsRun {
    /// Draw order per update: blend weight, then the objective's own noise
    /// (if any). The agent index is drawn by the caller.
    fn step_agent(
        &mut self,
        ctx: &mut RunContext<'_>,
        agent: usize,
        t: u64,
        t_max: u64,
    ) -> Result<()> {
        let alpha = self.params.learning_rate(t, t_max)?;
        let rho = self.weights.next(&mut ctx.rng);
        let a = &self.agents[agent];
        let r_new = a
            .hist
            .prev
            .iter()
            .zip(&a.hist.prev2)
            .zip(&self.best_r)
            .map(|((&prev, &prev2), &r_best)| {
                let d_t = corrected_delta(prev, prev2, &self.params, alpha);
                let r_t = invert_delta(d_t, self.params.k)?;
                Ok((rho * r_t + (1.0 - rho) * r_best)
                    .clamp(self.params.r_floor, self.params.r_ceil))
            })
            .collect::<Result<Vec<f64>>>()?;
        let position = r_new
            .iter()
            .zip(&ctx.bounds)
            .map(|(&ri, &(lo, hi))| from_internal(ri, lo, hi).clamp(lo, hi))
            .collect::<Vec<f64>>();
        let cost = ctx.evaluate(&position)?;
        if ctx.offer(cost, &position, t, true) {
            self.best_r.copy_from_slice(&r_new);
        }
        // refresh the history from the realized position so δ and r never
        // diverge
        let a = &mut self.agents[agent];
        std::mem::swap(&mut a.hist.prev, &mut a.hist.prev2);
        for (slot, &r) in a.hist.prev.iter_mut().zip(&r_new) {
            *slot = delta_of_r(r, self.params.k)?;
        }
        a.r = r_new;
        a.position = position;
        a.cost = cost;
        Ok(())
    }
}
