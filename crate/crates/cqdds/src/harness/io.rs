//! CSV and JSON persistence.
//!
//! Numeric fields are written with Rust's shortest round-trip decimal
//! formatting, so `parse(emit(x)) == x` exactly and output bytes are stable
//! across executions. Position vectors are embedded in one CSV field with
//! `;` separators. Wall-clock timings live in a separate file because they
//! are excluded from determinism checks.

use super::matrix::TrialRecord;
use crate::bench::FunctionId;
use crate::error::{Error, Result};
use crate::optimizers::{AlgorithmId, TrajectoryPoint};
use std::fmt::Write as _;
use std::str::FromStr;

pub const RECORDS_HEADER: &str =
    "algorithm,function,dim,trial,sub_seed,best_cost,best_position,evaluations";
pub const TIMINGS_HEADER: &str = "algorithm,function,trial,wall_time_ms";
pub const TRAJECTORY_HEADER: &str = "iteration,cost,x1,x2";
pub const CHAOS_HEADER: &str = "index,weight";
pub const FIXTURE_HEADER: &str = "function,algorithm,mean,best,std";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_f64(field: &str, line: usize) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| parse_err(line, format!("invalid number `{field}`")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite number `{field}`")));
    }
    Ok(v)
}

fn parse_int<T: FromStr>(field: &str, line: usize, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{field}`")))
}

fn split_fields(line: &str, expected: usize, line_no: usize) -> Result<Vec<&str>> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != expected {
        return Err(parse_err(
            line_no,
            format!("expected {expected} fields, got {}", fields.len()),
        ));
    }
    Ok(fields)
}

fn position_to_field(position: &[f64]) -> String {
    let mut out = String::new();
    for (i, v) in position.iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        let _ = write!(out, "{v}");
    }
    out
}

fn position_from_field(field: &str, line: usize) -> Result<Vec<f64>> {
    if field.is_empty() {
        return Err(parse_err(line, "empty position field"));
    }
    field.split(';').map(|p| parse_f64(p, line)).collect()
}

/// Canonical ordering: algorithm id, suite position, trial index.
pub fn canonical_sort(records: &mut [TrialRecord]) {
    records.sort_by(|a, b| {
        (a.algorithm.as_str(), a.function.index(), a.trial).cmp(&(
            b.algorithm.as_str(),
            b.function.index(),
            b.trial,
        ))
    });
}

pub fn records_to_csv(records: &[TrialRecord]) -> String {
    let mut out = String::from(RECORDS_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.algorithm,
            r.function,
            r.dim,
            r.trial,
            r.sub_seed,
            r.best_cost,
            position_to_field(&r.best_position),
            r.evaluations
        );
    }
    out
}

/// Parses a records file. Wall-clock time is not persisted in records.csv,
/// so parsed records carry `wall_time_ms = 0`.
pub fn records_from_csv(text: &str) -> Result<Vec<TrialRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == RECORDS_HEADER => {}
        Some((_, header)) => return Err(parse_err(1, format!("unexpected header `{header}`"))),
        None => return Err(parse_err(1, "empty records file")),
    }
    let mut records = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        let f = split_fields(line, 8, line_no)?;
        records.push(TrialRecord {
            algorithm: f[0]
                .parse()
                .map_err(|_| parse_err(line_no, format!("unknown algorithm `{}`", f[0])))?,
            function: f[1]
                .parse()
                .map_err(|_| parse_err(line_no, format!("unknown function `{}`", f[1])))?,
            dim: parse_int(f[2], line_no, "dim")?,
            trial: parse_int(f[3], line_no, "trial")?,
            sub_seed: parse_int(f[4], line_no, "sub_seed")?,
            best_cost: parse_f64(f[5], line_no)?,
            best_position: position_from_field(f[6], line_no)?,
            evaluations: parse_int(f[7], line_no, "evaluations")?,
            wall_time_ms: 0,
        });
    }
    Ok(records)
}

pub fn records_to_json(records: &[TrialRecord]) -> String {
    let mut json = serde_json::to_string_pretty(records).expect("records serialize");
    json.push('\n');
    json
}

pub fn records_from_json(text: &str) -> Result<Vec<TrialRecord>> {
    serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
}

pub fn timings_to_csv(records: &[TrialRecord]) -> String {
    let mut out = String::from(TIMINGS_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.algorithm, r.function, r.trial, r.wall_time_ms
        );
    }
    out
}

pub fn trajectory_to_csv(points: &[TrajectoryPoint]) -> String {
    let mut out = String::from(TRAJECTORY_HEADER);
    out.push('\n');
    for p in points {
        let _ = writeln!(out, "{},{},{},{}", p.iteration, p.cost, p.x1, p.x2);
    }
    out
}

pub fn trajectory_from_csv(text: &str) -> Result<Vec<TrajectoryPoint>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == TRAJECTORY_HEADER => {}
        Some((_, header)) => return Err(parse_err(1, format!("unexpected header `{header}`"))),
        None => return Err(parse_err(1, "empty trajectory file")),
    }
    let mut points = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        let f = split_fields(line, 4, line_no)?;
        points.push(TrajectoryPoint {
            iteration: parse_int(f[0], line_no, "iteration")?,
            cost: parse_f64(f[1], line_no)?,
            x1: parse_f64(f[2], line_no)?,
            x2: parse_f64(f[3], line_no)?,
        });
    }
    Ok(points)
}

pub fn chaos_to_csv(weights: &[f64]) -> String {
    let mut out = String::from(CHAOS_HEADER);
    out.push('\n');
    for (i, w) in weights.iter().enumerate() {
        let _ = writeln!(out, "{},{}", i + 1, w);
    }
    out
}

/// One row of the reference-table fixture: per-(function, algorithm)
/// mean/best/std over 30 trials.
#[derive(Debug, Clone, PartialEq)]
pub struct FixtureRow {
    pub function: FunctionId,
    pub algorithm: AlgorithmId,
    pub mean: f64,
    pub best: f64,
    pub std: f64,
}

pub fn fixture_from_csv(text: &str) -> Result<Vec<FixtureRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == FIXTURE_HEADER => {}
        Some((_, header)) => return Err(parse_err(1, format!("unexpected header `{header}`"))),
        None => return Err(parse_err(1, "empty fixture file")),
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        let f = split_fields(line, 5, line_no)?;
        rows.push(FixtureRow {
            function: f[0]
                .parse()
                .map_err(|_| parse_err(line_no, format!("unknown function `{}`", f[0])))?,
            algorithm: f[1]
                .parse()
                .map_err(|_| parse_err(line_no, format!("unknown algorithm `{}`", f[1])))?,
            mean: parse_f64(f[2], line_no)?,
            best: parse_f64(f[3], line_no)?,
            std: parse_f64(f[4], line_no)?,
        });
    }
    Ok(rows)
}
