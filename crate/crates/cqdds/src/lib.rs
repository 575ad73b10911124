//! Chaotic Quantum Double Delta Swarm (C-QDDS) optimization toolkit.
//!
//! The crate bundles:
//!
//! * [`bench`](mod@bench) — the F1..F23 benchmark suite (bounds,
//!   coefficient tables, known-optimum metadata, evaluators),
//! * [`chaos`] — the Chebyshev chaotic weight source used by C-QDDS,
//! * [`delta`] — the characteristic-constraint dynamics: the δ(r) map, its
//!   numeric inversion, the gradient-band correction and the learning-rate
//!   schedule,
//! * [`optimizers`] — C-QDDS, a uniform-weight ablation, QPSO and two PSO
//!   variants behind one seeded, deterministic interface,
//! * [`stats`] — trial summaries, t-tests, effect sizes, win/tie/loss
//!   tallies, average ranks and precision curves,
//! * [`harness`] — experiment matrices, CSV/JSON persistence and report
//!   generation for the CLI.
//!
//! Every run is a pure function of `(algorithm, function, dim, iterations,
//! seed)`; the harness derives per-trial sub-seeds so parallel scheduling
//! never changes results.

pub mod bench;
pub mod chaos;
pub mod delta;
pub mod error;
pub mod harness;
pub mod optimizers;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
