//! Statistics derived from run traces: hitting times, per-generation gain
//! sequences, zero-gain stagnation runs, and the estimators built on them.

use rayon::prelude::*;

use crate::algorithms::{run_fixed_generations, AlgorithmError, EaConfig, RunTrace};
use crate::core_types::{BitString, RngStream};
use crate::problems::MinimizedView;

/// Per-generation decreases of the minimized fitness:
/// `gains[t] = Y_t − Y_{t+1}`. Non-negative throughout by elitism.
#[derive(Clone, Debug, PartialEq)]
pub struct GainSequence {
    pub gains: Vec<f64>,
}

impl GainSequence {
    pub fn len(&self) -> usize {
        self.gains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gains.is_empty()
    }

    /// Total decrease, which telescopes to Y_0 − Y_final.
    pub fn total(&self) -> f64 {
        self.gains.iter().sum()
    }
}

/// How to score a maximal block of consecutive zero gains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZeroRunMode {
    /// Length of the block itself (a run that improves every generation
    /// scores 0). The default.
    #[default]
    ZeroGainCount,
    /// Number of generations until the fitness next changes, i.e. block
    /// length + 1. Alternative reading of "interval with zero gain".
    StepsUntilChange,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InstrumentationError {
    #[error("trace never reaches the target fitness band")]
    NotHit,
    #[error("no strictly positive gain was observed")]
    NoImprovementObserved,
    #[error("at least one trace is required")]
    EmptyInput,
}

/// Estimate returned by [`empirical_multiple_gain`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GainEstimate {
    pub mean: f64,
    pub stderr: f64,
}

/// Smallest index t with Y_t ≤ epsilon.
pub fn first_hitting_time(trace: &RunTrace, epsilon: f64) -> Result<u64, InstrumentationError> {
    trace
        .y_values
        .iter()
        .position(|&y| y <= epsilon)
        .map(|t| t as u64)
        .ok_or(InstrumentationError::NotHit)
}

/// Consecutive differences of the trace's Y values.
pub fn gain_sequence(trace: &RunTrace) -> GainSequence {
    GainSequence { gains: trace.y_values.windows(2).map(|w| w[0] - w[1]).collect() }
}

/// Longest stagnation before the optimum is reached, under the default
/// [`ZeroRunMode::ZeroGainCount`] scoring.
pub fn longest_zero_gain_run(trace: &RunTrace) -> u64 {
    longest_zero_gain_run_with_mode(trace, ZeroRunMode::ZeroGainCount)
}

/// Longest stagnation before the optimum is reached. Only generations
/// before the first hit count; a trace that starts on the optimum (or
/// hits it in its first generation) scores 0. For traces that never hit,
/// the whole gain sequence is considered.
pub fn longest_zero_gain_run_with_mode(trace: &RunTrace, mode: ZeroRunMode) -> u64 {
    let gains = gain_sequence(trace);
    let horizon = first_hitting_time(trace, 0.0)
        .map(|t| t as usize)
        .unwrap_or(gains.len());
    let mut longest = 0u64;
    let mut current = 0u64;
    for &g in &gains.gains[..horizon.min(gains.len())] {
        if g == 0.0 {
            current += 1;
            longest = longest.max(current);
        } else {
            current = 0;
        }
    }
    match mode {
        ZeroRunMode::ZeroGainCount => longest,
        ZeroRunMode::StepsUntilChange => {
            if horizon == 0 {
                0
            } else {
                longest + 1
            }
        }
    }
}

/// Smallest strictly positive gain observed anywhere in `traces` — the
/// empirical stand-in for the minimal fitness gap.
pub fn estimate_alpha(traces: &[RunTrace]) -> Result<f64, InstrumentationError> {
    let mut min_positive = f64::INFINITY;
    for trace in traces {
        for gain in gain_sequence(trace).gains {
            if gain > 0.0 && gain < min_positive {
                min_positive = gain;
            }
        }
    }
    if min_positive.is_finite() {
        Ok(min_positive)
    } else {
        Err(InstrumentationError::NoImprovementObserved)
    }
}

/// Mean over runs of the longest zero-gain stagnation (default scoring).
pub fn estimate_khat(traces: &[RunTrace]) -> Result<f64, InstrumentationError> {
    estimate_khat_with_mode(traces, ZeroRunMode::ZeroGainCount)
}

/// Mean over runs of the longest zero-gain stagnation.
pub fn estimate_khat_with_mode(
    traces: &[RunTrace],
    mode: ZeroRunMode,
) -> Result<f64, InstrumentationError> {
    if traces.is_empty() {
        return Err(InstrumentationError::EmptyInput);
    }
    let total: u64 =
        traces.iter().map(|t| longest_zero_gain_run_with_mode(t, mode)).sum();
    Ok(total as f64 / traces.len() as f64)
}

/// Monte-Carlo estimate of the expected k-generation gain
/// E[Y_t − Y_{t+k} | X_t = x]: the configured EA is advanced k generations
/// from `x`, `samples` independent times, each on its own sub-stream.
/// Returns the sample mean and its standard error.
pub fn empirical_multiple_gain(
    problem: &MinimizedView,
    cfg: &EaConfig,
    x: &BitString,
    k: u64,
    samples: u64,
    rng: &mut RngStream,
) -> Result<GainEstimate, AlgorithmError> {
    assert!(k >= 1, "the gain horizon k must be at least 1");
    assert!(samples >= 1, "at least one sample is required");
    let mut streams = Vec::with_capacity(samples as usize);
    for i in 0..samples {
        streams.push(rng.derive_child(i));
    }
    let gains = streams
        .into_par_iter()
        .map(|mut stream| {
            run_fixed_generations(problem, cfg, x, k, &mut stream)
                .map(|trace| trace.y_values[0] - trace.final_y())
        })
        .collect::<Result<Vec<f64>, AlgorithmError>>()?;

    let n = gains.len() as f64;
    let mean = gains.iter().sum::<f64>() / n;
    let stderr = if gains.len() < 2 {
        0.0
    } else {
        let var = gains.iter().map(|g| (g - mean).powi(2)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    };
    Ok(GainEstimate { mean, stderr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::derive_stream;
    use crate::problems::{MinimizedView, OneMaxProblem, Problem};

    fn trace_from(y_values: Vec<f64>) -> RunTrace {
        let generations_used = (y_values.len() - 1) as u64;
        let hit = *y_values.last().unwrap() == 0.0;
        RunTrace { y_values, hit, generations_used, evaluations: generations_used, run_seed: (0, 0) }
    }

    #[test]
    fn hitting_time_examples() {
        assert_eq!(first_hitting_time(&trace_from(vec![3.0, 2.0, 2.0, 1.0, 0.0]), 0.0), Ok(4));
        assert_eq!(first_hitting_time(&trace_from(vec![0.0]), 0.0), Ok(0));
        assert_eq!(
            first_hitting_time(&trace_from(vec![3.0, 2.0, 1.0]), 0.0),
            Err(InstrumentationError::NotHit)
        );
        assert_eq!(first_hitting_time(&trace_from(vec![3.0, 2.0, 1.0]), 1.0), Ok(2));
    }

    #[test]
    fn gain_sequence_examples() {
        assert_eq!(
            gain_sequence(&trace_from(vec![3.0, 2.0, 2.0, 0.0])).gains,
            vec![1.0, 0.0, 2.0]
        );
        assert!(gain_sequence(&trace_from(vec![5.0])).is_empty());
        assert_eq!(
            gain_sequence(&trace_from(vec![7.0, 7.0, 7.0, 6.0])).gains,
            vec![0.0, 0.0, 1.0]
        );
    }

    #[test]
    fn gain_sequence_telescopes() {
        let trace = trace_from(vec![9.0, 5.0, 5.0, 2.0, 0.0]);
        assert_eq!(gain_sequence(&trace).total(), 9.0);
    }

    #[test]
    fn zero_run_examples() {
        assert_eq!(longest_zero_gain_run(&trace_from(vec![3.0, 2.0, 1.0, 0.0])), 0);
        assert_eq!(longest_zero_gain_run(&trace_from(vec![3.0, 3.0, 3.0, 2.0, 1.0, 0.0])), 2);
        assert_eq!(longest_zero_gain_run(&trace_from(vec![4.0, 4.0, 3.0, 3.0, 3.0, 0.0])), 2);
        assert_eq!(longest_zero_gain_run(&trace_from(vec![0.0])), 0);
    }

    #[test]
    fn zero_runs_stop_at_the_first_hit() {
        // Y stays 0 after generation 2; the plateau at the optimum does
        // not count as stagnation.
        let trace = trace_from(vec![2.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(longest_zero_gain_run(&trace), 0);
    }

    #[test]
    fn steps_until_change_mode_adds_one() {
        let trace = trace_from(vec![3.0, 3.0, 3.0, 2.0, 1.0, 0.0]);
        assert_eq!(longest_zero_gain_run_with_mode(&trace, ZeroRunMode::StepsUntilChange), 3);
        let brisk = trace_from(vec![3.0, 2.0, 1.0, 0.0]);
        assert_eq!(longest_zero_gain_run_with_mode(&brisk, ZeroRunMode::StepsUntilChange), 1);
        assert_eq!(
            longest_zero_gain_run_with_mode(&trace_from(vec![0.0]), ZeroRunMode::StepsUntilChange),
            0
        );
    }

    #[test]
    fn alpha_estimator() {
        let traces =
            vec![trace_from(vec![6.0, 4.0, 3.0, 0.0]), trace_from(vec![2.0, 2.0, 2.0])];
        assert_eq!(estimate_alpha(&traces), Ok(1.0));
        assert_eq!(estimate_alpha(&[trace_from(vec![4.0, 2.0])]), Ok(2.0));
        assert_eq!(
            estimate_alpha(&[trace_from(vec![2.0, 2.0, 2.0])]),
            Err(InstrumentationError::NoImprovementObserved)
        );
    }

    #[test]
    fn khat_estimator() {
        let traces = vec![
            trace_from(vec![5.0, 5.0, 5.0, 5.0, 2.0, 0.0]), // longest zero run 3
            trace_from(vec![9.0, 9.0, 9.0, 9.0, 9.0, 9.0, 3.0, 0.0]), // longest zero run 5
        ];
        assert_eq!(estimate_khat(&traces), Ok(4.0));
        assert_eq!(estimate_khat(&[trace_from(vec![1.0, 0.0])]), Ok(0.0));
        assert_eq!(estimate_khat(&[]), Err(InstrumentationError::EmptyInput));
    }

    #[test]
    fn multiple_gain_from_all_zeros_two_bits() {
        // With n = 2 and mutation probability 1/2 the four possible
        // mutants are equally likely; accept-on-equal keeps all of them,
        // so the one-generation gain takes values {0, 1, 1, 2}/4.
        let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(2))).unwrap();
        let cfg = EaConfig::one_plus_one(0.5);
        let mut rng = derive_stream(99, 0);
        let est =
            empirical_multiple_gain(&view, &cfg, &BitString::zeros(2), 1, 100_000, &mut rng)
                .unwrap();
        assert!((est.mean - 1.0).abs() <= 3.0 * est.stderr, "mean {} stderr {}", est.mean, est.stderr);
        assert!(est.stderr < 0.01);
    }

    #[test]
    fn multiple_gain_at_optimum_is_exactly_zero() {
        let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(4))).unwrap();
        let cfg = EaConfig::one_plus_one(0.25);
        let mut rng = derive_stream(99, 0);
        let est =
            empirical_multiple_gain(&view, &cfg, &BitString::ones(4), 3, 500, &mut rng).unwrap();
        assert_eq!(est.mean, 0.0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn multiple_gain_is_deterministic_given_the_stream() {
        let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(6))).unwrap();
        let cfg = EaConfig::one_plus_lambda(4, 1.0 / 6.0);
        let a = empirical_multiple_gain(
            &view,
            &cfg,
            &BitString::zeros(6),
            2,
            2_000,
            &mut derive_stream(5, 1),
        )
        .unwrap();
        let b = empirical_multiple_gain(
            &view,
            &cfg,
            &BitString::zeros(6),
            2,
            2_000,
            &mut derive_stream(5, 1),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    #[should_panic(expected = "gain horizon")]
    fn zero_horizon_rejected() {
        let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(2))).unwrap();
        let cfg = EaConfig::one_plus_one(0.5);
        let mut rng = derive_stream(99, 0);
        let _ = empirical_multiple_gain(&view, &cfg, &BitString::zeros(2), 0, 10, &mut rng);
    }
}
