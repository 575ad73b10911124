//! Experiment orchestration: configuration, seeded parallel trial
//! matrices, CSV/JSON persistence and report generation.

pub mod config;
pub mod io;
pub mod matrix;
pub mod report;

pub use config::{ExperimentConfig, OutputFormat};
pub use matrix::{run_matrix, TrialRecord};
pub use report::{build_report, ReportBundle, TiePrecision};
