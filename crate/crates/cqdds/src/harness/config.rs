//! Experiment configuration and the flat key-value config file format.
//!
//! Config files hold one `key = value` pair per line; `#` starts a comment.
//! Keys mirror the CLI flags; values given on the command line override the
//! file. List values (algorithms, functions) are comma-separated, and
//! `function = all` expands to the whole suite.

use crate::bench::FunctionId;
use crate::error::{Error, Result};
use crate::optimizers::{AlgorithmId, SwarmMode};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::InvalidParam(format!(
                "format must be csv or json, got `{other}`"
            ))),
        }
    }
}

/// A fully resolved experiment matrix.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algorithms: Vec<AlgorithmId>,
    pub functions: Vec<FunctionId>,
    /// Dimensionality for variable-dimension functions; fixed-dimension
    /// functions use their own.
    pub dim: usize,
    pub iterations: u64,
    pub trials: u32,
    pub master_seed: u64,
    pub workers: usize,
    pub swarm_mode: SwarmMode,
    pub output_dir: PathBuf,
    pub format: OutputFormat,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![AlgorithmId::Cqdds],
            functions: vec![FunctionId::F1],
            dim: 30,
            iterations: 1000,
            trials: 30,
            master_seed: 42,
            workers: 1,
            swarm_mode: SwarmMode::OneAgent,
            output_dir: PathBuf::from("out"),
            format: OutputFormat::Csv,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParam("no algorithms selected".into()));
        }
        if self.functions.is_empty() {
            return Err(Error::InvalidParam("no functions selected".into()));
        }
        if let Some(external) = self.algorithms.iter().find(|a| !a.is_native()) {
            return Err(Error::ExternalAlgorithm(external.as_str()));
        }
        if self.iterations < 3 {
            return Err(Error::InvalidParam(format!(
                "iterations must be >= 3, got {}",
                self.iterations
            )));
        }
        if self.trials < 1 {
            return Err(Error::InvalidParam("trials must be >= 1".into()));
        }
        if self.dim < 2 {
            return Err(Error::InvalidParam(format!(
                "dim must be >= 2 for variable-dimension functions, got {}",
                self.dim
            )));
        }
        if self.workers < 1 {
            return Err(Error::InvalidParam("workers must be >= 1".into()));
        }
        Ok(())
    }

    /// Applies a parsed config-file overlay underneath the current values;
    /// fields already set by the caller win.
    pub fn apply_overlay(&mut self, overlay: &ConfigOverlay, overridden: &OverriddenFields) {
        macro_rules! take {
            ($field:ident) => {
                if let Some(v) = &overlay.$field {
                    if !overridden.$field {
                        self.$field = v.clone();
                    }
                }
            };
        }
        take!(algorithms);
        take!(functions);
        take!(dim);
        take!(iterations);
        take!(trials);
        take!(master_seed);
        take!(workers);
        take!(swarm_mode);
        take!(output_dir);
        take!(format);
    }
}

/// Which fields the CLI set explicitly (they beat the config file).
#[derive(Debug, Clone, Copy, Default)]
pub struct OverriddenFields {
    pub algorithms: bool,
    pub functions: bool,
    pub dim: bool,
    pub iterations: bool,
    pub trials: bool,
    pub master_seed: bool,
    pub workers: bool,
    pub swarm_mode: bool,
    pub output_dir: bool,
    pub format: bool,
}

/// Values read from a config file; every field optional.
#[derive(Debug, Clone, Default)]
pub struct ConfigOverlay {
    pub algorithms: Option<Vec<AlgorithmId>>,
    pub functions: Option<Vec<FunctionId>>,
    pub dim: Option<usize>,
    pub iterations: Option<u64>,
    pub trials: Option<u32>,
    pub master_seed: Option<u64>,
    pub workers: Option<usize>,
    pub swarm_mode: Option<SwarmMode>,
    pub output_dir: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

pub fn parse_algorithm_list(value: &str) -> Result<Vec<AlgorithmId>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(AlgorithmId::from_str)
        .collect()
}

pub fn parse_function_list(value: &str) -> Result<Vec<FunctionId>> {
    if value.trim().eq_ignore_ascii_case("all") {
        return Ok(FunctionId::ALL.to_vec());
    }
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(FunctionId::from_str)
        .collect()
}

fn parse_num<T: FromStr>(value: &str, line: usize, what: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what}: `{value}`"),
    })
}

/// Parses the flat `key = value` config format.
pub fn parse_config_str(text: &str) -> Result<ConfigOverlay> {
    let mut overlay = ConfigOverlay::default();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `key = value`, got `{line}`"),
            });
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "algo" => overlay.algorithms = Some(parse_algorithm_list(value)?),
            "function" => overlay.functions = Some(parse_function_list(value)?),
            "dim" => overlay.dim = Some(parse_num(value, line_no, "dim")?),
            "iters" => overlay.iterations = Some(parse_num(value, line_no, "iters")?),
            "trials" => overlay.trials = Some(parse_num(value, line_no, "trials")?),
            "seed" => overlay.master_seed = Some(parse_num(value, line_no, "seed")?),
            "workers" => overlay.workers = Some(parse_num(value, line_no, "workers")?),
            "swarm_mode" => overlay.swarm_mode = Some(value.parse()?),
            "out" => overlay.output_dir = Some(PathBuf::from(value)),
            "format" => overlay.format = Some(value.parse()?),
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown key `{other}`"),
                })
            }
        }
    }
    Ok(overlay)
}
