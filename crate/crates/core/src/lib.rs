//! Runtime-analysis laboratory for elitist evolutionary algorithms.
//!
//! The crate studies how long a (1+1) or (1+λ) evolutionary algorithm needs
//! to reach a global optimum, through four cooperating layers:
//!
//! * [`algorithms`] runs instrumented EAs on the problem families in
//!   [`problems`] (OneMax, a capacity-3 knapsack with favorably correlated
//!   weights, and a 2-literal MAX-SAT formula), producing per-generation
//!   fitness traces.
//! * [`bounds`] evaluates closed-form upper bounds on the expected first
//!   hitting time (EFHT) and on the zero-gain interval length `k_low`.
//! * [`oracle`] computes exact EFHT values for small instances from
//!   absorbing Markov chains, giving ground truth to test both the
//!   simulations and the bounds against.
//! * [`experiments`] drives replicated campaigns over a grid of encoding
//!   lengths, aggregates hitting-time statistics, and checks the dominance
//!   and Pearson-correlation criteria.
//!
//! Everything is deterministic given a master seed: randomness flows through
//! [`core_types::RngStream`], a counter-based generator that derives an
//! independent stream per run.

pub mod algorithms;
pub mod bounds;
pub mod core_types;
pub mod experiments;
pub mod instrumentation;
pub mod oracle;
pub mod problems;

pub use core_types::{derive_stream, flip_bits, target_space_stats, BitString, RngStream, TargetSpace};
