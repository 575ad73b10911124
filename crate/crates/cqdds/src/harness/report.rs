//! Cross-algorithm comparison reports: summary tables, t/d/g matrices,
//! win/tie/loss tallies, average ranks and precision curves.

use super::io::FixtureRow;
use super::matrix::TrialRecord;
use crate::bench::FunctionId;
use crate::error::Result;
use crate::optimizers::AlgorithmId;
use crate::stats::{
    average_ranks, effect_sizes, precision_curve, round_sig, win_tie_loss, Direction, EffectSizes,
    RankRow, SampleSummary, WtlCounts,
};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Trial-count convention of the reference tables.
pub const FIXTURE_TRIALS: usize = 30;

/// How values are compared when tallying wins and ties: raw run data uses
/// exact comparison, fixture data is rounded to the tables' print precision
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiePrecision {
    Exact,
    SigFigs(u32),
}

impl TiePrecision {
    fn apply(self, v: f64) -> f64 {
        match self {
            TiePrecision::Exact => v,
            TiePrecision::SigFigs(sig) => round_sig(v, sig),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Metric {
    Mean,
    Best,
    Std,
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::Mean, Metric::Best, Metric::Std];

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Mean => "mean",
            Metric::Best => "best",
            Metric::Std => "std",
        }
    }

    fn of(self, s: &SampleSummary) -> f64 {
        match self {
            Metric::Mean => s.mean,
            Metric::Best => s.min,
            Metric::Std => s.std,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CellSummary {
    pub algorithm: AlgorithmId,
    pub function: FunctionId,
    pub summary: SampleSummary,
}

/// A matrix cell without enough trials for statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gap {
    pub algorithm: AlgorithmId,
    pub function: FunctionId,
    pub trials_found: usize,
}

#[derive(Debug, Clone)]
pub struct ComparisonRow {
    pub function: FunctionId,
    pub reference: AlgorithmId,
    pub competitor: AlgorithmId,
    pub effects: EffectSizes,
}

#[derive(Debug, Clone)]
pub struct WtlRow {
    pub metric: Metric,
    pub algorithm: AlgorithmId,
    pub counts: WtlCounts,
}

#[derive(Debug, Clone)]
pub struct RankReportRow {
    pub metric: Metric,
    pub algorithm: AlgorithmId,
    pub rank: RankRow,
}

#[derive(Debug, Clone)]
pub struct PrecisionRow {
    pub algorithm: AlgorithmId,
    pub function: FunctionId,
    pub points: Vec<(f64, usize)>,
}

#[derive(Debug, Clone, Default)]
pub struct ReportBundle {
    /// Canonically ordered algorithms; the first is the comparison
    /// reference.
    pub algorithms: Vec<AlgorithmId>,
    pub functions: Vec<FunctionId>,
    pub summaries: Vec<CellSummary>,
    pub comparisons: Vec<ComparisonRow>,
    pub wtl: Vec<WtlRow>,
    pub ranks: Vec<RankReportRow>,
    pub precision: Vec<PrecisionRow>,
    pub gaps: Vec<Gap>,
}

type CostMap = BTreeMap<(AlgorithmId, FunctionId), Vec<f64>>;

/// Groups trial records into per-cell summaries. Cells with fewer than two
/// trials become gaps rather than being silently dropped.
pub fn summarize_records(records: &[TrialRecord]) -> Result<(Vec<CellSummary>, CostMap, Vec<Gap>)> {
    let mut costs: CostMap = BTreeMap::new();
    for r in records {
        costs
            .entry((r.algorithm, r.function))
            .or_default()
            .push(r.best_cost);
    }
    let mut cells = Vec::new();
    let mut gaps = Vec::new();
    for (&(algorithm, function), cell_costs) in &costs {
        if cell_costs.len() < 2 {
            gaps.push(Gap {
                algorithm,
                function,
                trials_found: cell_costs.len(),
            });
        } else {
            cells.push(CellSummary {
                algorithm,
                function,
                summary: SampleSummary::from_costs(cell_costs)?,
            });
        }
    }
    Ok((cells, costs, gaps))
}

/// Interprets fixture rows as 30-trial summaries.
pub fn summarize_fixture(rows: &[FixtureRow]) -> Result<Vec<CellSummary>> {
    rows.iter()
        .map(|r| {
            Ok(CellSummary {
                algorithm: r.algorithm,
                function: r.function,
                summary: SampleSummary::new(r.mean, r.std, r.best, FIXTURE_TRIALS)?,
            })
        })
        .collect()
}

/// Builds the full comparison bundle. The reference algorithm is the first
/// present in the canonical id order (C-QDDS when it participates). All
/// three win/tie/loss metric rows minimize.
pub fn build_report(
    cells: &[CellSummary],
    raw_costs: Option<&CostMap>,
    tie_precision: TiePrecision,
    gaps: Vec<Gap>,
) -> Result<ReportBundle> {
    let mut by_cell: BTreeMap<(AlgorithmId, FunctionId), &CellSummary> = BTreeMap::new();
    let mut algorithms: Vec<AlgorithmId> = Vec::new();
    let mut functions: Vec<FunctionId> = Vec::new();
    for cell in cells {
        by_cell.insert((cell.algorithm, cell.function), cell);
        if !algorithms.contains(&cell.algorithm) {
            algorithms.push(cell.algorithm);
        }
        if !functions.contains(&cell.function) {
            functions.push(cell.function);
        }
    }
    algorithms.sort();
    functions.sort();

    let mut bundle = ReportBundle {
        algorithms: algorithms.clone(),
        functions: functions.clone(),
        summaries: cells.to_vec(),
        gaps,
        ..ReportBundle::default()
    };
    bundle
        .summaries
        .sort_by_key(|c| (c.algorithm, c.function.index()));

    // pairwise reference-vs-competitor statistics
    if let Some((&reference, rest)) = algorithms.split_first() {
        for &competitor in rest {
            for &function in &functions {
                let (Some(a), Some(b)) = (
                    by_cell.get(&(reference, function)),
                    by_cell.get(&(competitor, function)),
                ) else {
                    continue;
                };
                bundle.comparisons.push(ComparisonRow {
                    function,
                    reference,
                    competitor,
                    effects: effect_sizes(&a.summary, &b.summary)?,
                });
            }
        }
    }

    // win/tie/loss over functions covered by every algorithm
    if algorithms.len() >= 2 {
        for metric in Metric::ALL {
            let mut tallies = vec![WtlCounts::default(); algorithms.len()];
            for &function in &functions {
                let row: Option<Vec<f64>> = algorithms
                    .iter()
                    .map(|&a| {
                        by_cell
                            .get(&(a, function))
                            .map(|c| tie_precision.apply(metric.of(&c.summary)))
                    })
                    .collect();
                let Some(row) = row else { continue };
                for (tally, outcome) in tallies
                    .iter_mut()
                    .zip(win_tie_loss(&row, Direction::Minimize)?)
                {
                    tally.add(outcome);
                }
            }
            let ranks = average_ranks(&tallies);
            for ((&algorithm, counts), rank) in algorithms.iter().zip(&tallies).zip(ranks) {
                bundle.wtl.push(WtlRow {
                    metric,
                    algorithm,
                    counts: *counts,
                });
                bundle.ranks.push(RankReportRow {
                    metric,
                    algorithm,
                    rank,
                });
            }
        }
    }

    if let Some(costs) = raw_costs {
        for (&(algorithm, function), cell_costs) in costs {
            if cell_costs.len() >= 2 {
                bundle.precision.push(PrecisionRow {
                    algorithm,
                    function,
                    points: precision_curve(cell_costs)?,
                });
            }
        }
    }

    Ok(bundle)
}

pub fn summary_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from("algorithm,function,n,mean,min,std\n");
    for c in &bundle.summaries {
        let s = &c.summary;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            c.algorithm, c.function, s.n, s.mean, s.min, s.std
        );
    }
    out
}

pub fn ttest_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from("function,reference,competitor,t_value,significant,degenerate\n");
    for c in &bundle.comparisons {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            c.function,
            c.reference,
            c.competitor,
            c.effects.t_value,
            c.effects.significant,
            c.effects.degenerate
        );
    }
    out
}

pub fn effects_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from(
        "function,reference,competitor,cohens_d,hedges_g_textbook,hedges_g_papermode\n",
    );
    for c in &bundle.comparisons {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            c.function,
            c.reference,
            c.competitor,
            c.effects.cohens_d,
            c.effects.hedges_g_textbook,
            c.effects.hedges_g_papermode
        );
    }
    out
}

pub fn wtl_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from("metric,algorithm,win,tie,loss\n");
    for r in &bundle.wtl {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.metric.as_str(),
            r.algorithm,
            r.counts.win,
            r.counts.tie,
            r.counts.loss
        );
    }
    out
}

pub fn ranks_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from("metric,algorithm,win_rank,tie_rank,loss_rank,average_rank\n");
    for r in &bundle.ranks {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.metric.as_str(),
            r.algorithm,
            r.rank.win_rank,
            r.rank.tie_rank,
            r.rank.loss_rank,
            r.rank.average
        );
    }
    out
}

pub fn precision_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from("algorithm,function,fraction,count\n");
    for row in &bundle.precision {
        for (fraction, count) in &row.points {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                row.algorithm, row.function, fraction, count
            );
        }
    }
    out
}

pub fn gaps_to_csv(bundle: &ReportBundle) -> String {
    let mut out = String::from("algorithm,function,trials_found\n");
    for g in &bundle.gaps {
        let _ = writeln!(out, "{},{},{}", g.algorithm, g.function, g.trials_found);
    }
    out
}
