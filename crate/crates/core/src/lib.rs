//! A laboratory for studying parameter control methods (PCMs) in
//! differential evolution.
//!
//! The crate provides:
//!
//! * [`de`] — the differential-evolution engine: population, mutation
//!   strategies, crossover methods, bound repair, and pairwise selection
//!   with an external archive;
//! * [`pcm`] — a catalog of 24 parameter control methods behind one
//!   generation-synchronous interface;
//! * [`problems`] — a 10-function benchmark suite with known optima;
//! * [`stats`] — means, medians, and a rank-sum test used for analysis;
//! * [`harness`] — run execution, restarts, target-based ECDF curves, and
//!   average performance scores;
//! * [`gao`] — a greedy approximate-oracle runner that picks per-step
//!   parameters by lookahead with common random numbers.
//!
//! Runs are deterministic: every run derives its own random stream from the
//! master seed and its coordinates, so results are byte-identical no matter
//! how runs are scheduled.

pub mod de;
pub mod error;
pub mod gao;
pub mod harness;
pub mod pcm;
pub mod problems;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
