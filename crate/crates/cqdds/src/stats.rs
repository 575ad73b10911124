//! Trial statistics: summaries, significance tests, effect sizes,
//! win/tie/loss tallies, ranks and precision curves.
//!
//! The two-sample quantities use the equal-n pooled form
//! `t = Δμ / √((s₁² + s₂²)/n)`, which is the form that reproduces the
//! reference comparison tables; Welch's correction is deliberately not
//! applied.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Two-tailed critical value at the 0.05 level for df = 58 (n = 30 per side).
pub const T_CRITICAL: f64 = 2.001717;

/// (mean, sample std, min, n) over independent trials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator).
    pub std: f64,
    pub min: f64,
    pub n: usize,
}

impl SampleSummary {
    pub fn new(mean: f64, std: f64, min: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParam(format!(
                "summary needs n >= 2, got {n}"
            )));
        }
        if !(mean.is_finite() && std.is_finite() && min.is_finite()) {
            return Err(Error::NonFinite {
                context: "sample summary",
            });
        }
        if std < 0.0 {
            return Err(Error::InvalidParam(format!("negative std {std}")));
        }
        Ok(Self { mean, std, min, n })
    }

    /// Summarizes raw trial costs.
    pub fn from_costs(costs: &[f64]) -> Result<Self> {
        if costs.len() < 2 {
            return Err(Error::InvalidParam(format!(
                "summary needs >= 2 trials, got {}",
                costs.len()
            )));
        }
        if costs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite {
                context: "trial costs",
            });
        }
        let n = costs.len() as f64;
        let mean = costs.iter().sum::<f64>() / n;
        let var = costs.iter().map(|c| (c - mean) * (c - mean)).sum::<f64>() / (n - 1.0);
        let min = costs.iter().copied().fold(f64::INFINITY, f64::min);
        Self::new(mean, var.sqrt(), min, costs.len())
    }

    /// Samuelson bound sanity: the sample minimum cannot exceed
    /// `mean + std·√(n−1)`.
    pub fn samuelson_consistent(&self) -> bool {
        self.min <= self.mean + self.std * ((self.n - 1) as f64).sqrt() + 1e-12
    }
}

fn require_equal_n(a: &SampleSummary, b: &SampleSummary) -> Result<usize> {
    if a.n != b.n {
        return Err(Error::InvalidParam(format!(
            "paired statistics need equal trial counts, got {} vs {}",
            a.n, b.n
        )));
    }
    Ok(a.n)
}

/// Result of the equal-n pooled two-sample t-test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TTest {
    pub t: f64,
    pub significant: bool,
    /// Zero pooled variance with unequal means.
    pub degenerate: bool,
}

pub fn t_test(a: &SampleSummary, b: &SampleSummary) -> Result<TTest> {
    let n = require_equal_n(a, b)? as f64;
    let pooled = ((a.std * a.std + b.std * b.std) / n).sqrt();
    let diff = a.mean - b.mean;
    if pooled == 0.0 {
        return Ok(if diff == 0.0 {
            TTest {
                t: 0.0,
                significant: false,
                degenerate: false,
            }
        } else {
            TTest {
                t: diff.signum() * f64::INFINITY,
                significant: true,
                degenerate: true,
            }
        });
    }
    let t = diff / pooled;
    Ok(TTest {
        t,
        significant: t.abs() > T_CRITICAL,
        degenerate: false,
    })
}

/// An effect-size value with a degeneracy marker for zero-variance pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Effect {
    pub value: f64,
    pub degenerate: bool,
}

/// Cohen's d: `Δμ / √((s₁² + s₂²)/2)`.
pub fn cohens_d(a: &SampleSummary, b: &SampleSummary) -> Result<Effect> {
    require_equal_n(a, b)?;
    let pooled = ((a.std * a.std + b.std * b.std) / 2.0).sqrt();
    let diff = a.mean - b.mean;
    if pooled == 0.0 {
        return Ok(if diff == 0.0 {
            Effect {
                value: 0.0,
                degenerate: false,
            }
        } else {
            Effect {
                value: diff.signum() * f64::INFINITY,
                degenerate: true,
            }
        });
    }
    Ok(Effect {
        value: diff / pooled,
        degenerate: false,
    })
}

/// Which published convention Hedges' g follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HedgesMode {
    /// `Δμ / √(((n−1)s₁² + (n−1)s₂²)/(2n−2))`; identical to Cohen's d at
    /// equal sample sizes.
    Textbook,
    /// `d · √((2n−2)/n)`, the constant ratio that reproduces the reference
    /// g table from the d table at n = 30.
    PaperMode,
}

pub fn hedges_g(a: &SampleSummary, b: &SampleSummary, mode: HedgesMode) -> Result<Effect> {
    let n = require_equal_n(a, b)? as f64;
    let d = cohens_d(a, b)?;
    match mode {
        HedgesMode::Textbook => Ok(d),
        HedgesMode::PaperMode => Ok(Effect {
            value: d.value * ((2.0 * n - 2.0) / n).sqrt(),
            degenerate: d.degenerate,
        }),
    }
}

/// The full effect bundle for one algorithm pair on one function.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct EffectSizes {
    pub t_value: f64,
    pub significant: bool,
    pub cohens_d: f64,
    pub hedges_g_textbook: f64,
    pub hedges_g_papermode: f64,
    pub degenerate: bool,
}

pub fn effect_sizes(a: &SampleSummary, b: &SampleSummary) -> Result<EffectSizes> {
    let t = t_test(a, b)?;
    let d = cohens_d(a, b)?;
    let gt = hedges_g(a, b, HedgesMode::Textbook)?;
    let gp = hedges_g(a, b, HedgesMode::PaperMode)?;
    Ok(EffectSizes {
        t_value: t.t,
        significant: t.significant,
        cohens_d: d.value,
        hedges_g_textbook: gt.value,
        hedges_g_papermode: gp.value,
        degenerate: t.degenerate || d.degenerate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Win,
    Tie,
    Loss,
}

/// Scores one row of per-algorithm values: the uniquely best value wins,
/// values equal to the best share ties, the rest lose.
pub fn win_tie_loss(values: &[f64], direction: Direction) -> Result<Vec<Outcome>> {
    if values.len() < 2 {
        return Err(Error::InvalidParam(
            "win/tie/loss needs >= 2 algorithms".into(),
        ));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            context: "win/tie/loss values",
        });
    }
    let best = match direction {
        Direction::Minimize => values.iter().copied().fold(f64::INFINITY, f64::min),
        Direction::Maximize => values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    };
    let winners = values.iter().filter(|v| **v == best).count();
    Ok(values
        .iter()
        .map(|v| {
            if *v != best {
                Outcome::Loss
            } else if winners == 1 {
                Outcome::Win
            } else {
                Outcome::Tie
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WtlCounts {
    pub win: u32,
    pub tie: u32,
    pub loss: u32,
}

impl WtlCounts {
    pub fn add(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Win => self.win += 1,
            Outcome::Tie => self.tie += 1,
            Outcome::Loss => self.loss += 1,
        }
    }

    pub fn total(&self) -> u32 {
        self.win + self.tie + self.loss
    }
}

/// Dense ranks (ties share, no gaps), 1 = best.
fn dense_rank_by<F: Fn(&u32, &u32) -> std::cmp::Ordering>(values: &[u32], cmp: F) -> Vec<u32> {
    let mut distinct: Vec<u32> = values.to_vec();
    distinct.sort_by(&cmp);
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.iter().position(|d| d == v).unwrap() as u32 + 1)
        .collect()
}

/// Per-algorithm rank decomposition of one win/tie/loss row set.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RankRow {
    pub win_rank: u32,
    pub tie_rank: u32,
    pub loss_rank: u32,
    pub average: f64,
}

/// Ranks a win/tie/loss table: more wins better, more ties better, fewer
/// losses better; the average rank is the mean of the three row ranks.
pub fn average_ranks(counts: &[WtlCounts]) -> Vec<RankRow> {
    let wins: Vec<u32> = counts.iter().map(|c| c.win).collect();
    let ties: Vec<u32> = counts.iter().map(|c| c.tie).collect();
    let losses: Vec<u32> = counts.iter().map(|c| c.loss).collect();
    let wr = dense_rank_by(&wins, |a, b| b.cmp(a));
    let tr = dense_rank_by(&ties, |a, b| b.cmp(a));
    let lr = dense_rank_by(&losses, |a, b| a.cmp(b));
    wr.into_iter()
        .zip(tr)
        .zip(lr)
        .map(|((w, t), l)| RankRow {
            win_rank: w,
            tie_rank: t,
            loss_rank: l,
            average: f64::from(w + t + l) / 3.0,
        })
        .collect()
}

/// Cumulative success counts over ten fractions of the cost range.
///
/// For f in 0.1..=1.0 the threshold is `min + f·(max − min)` and the count
/// tallies costs strictly below it, so the f = 1.0 endpoint excludes the
/// maximal cost. A degenerate sample (max = min) counts every trial at
/// every fraction.
pub fn precision_curve(costs: &[f64]) -> Result<Vec<(f64, usize)>> {
    if costs.is_empty() {
        return Err(Error::InvalidParam(
            "precision curve needs >= 1 cost".into(),
        ));
    }
    if costs.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite {
            context: "precision-curve costs",
        });
    }
    let min = costs.iter().copied().fold(f64::INFINITY, f64::min);
    let max = costs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((1..=10)
        .map(|i| {
            let f = i as f64 / 10.0;
            let count = if max == min {
                costs.len()
            } else {
                let threshold = min + f * (max - min);
                costs.iter().filter(|c| **c < threshold).count()
            };
            (f, count)
        })
        .collect())
}

/// Rounds to `sig` significant figures with IEEE round-half-to-even on
/// exact .5 cases (used to tally wins and ties at the precision the
/// reference tables are printed at).
pub fn round_sig(x: f64, sig: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mag = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(sig as i32 - 1 - mag);
    round_half_even(x * factor) / factor
}

fn round_half_even(y: f64) -> f64 {
    let floor = y.floor();
    match y - floor {
        d if d > 0.5 => floor + 1.0,
        d if d < 0.5 => floor,
        // exact tie: keep the even neighbor
        _ => {
            if (floor as i64) % 2 == 0 {
                floor
            } else {
                floor + 1.0
            }
        }
    }
}
