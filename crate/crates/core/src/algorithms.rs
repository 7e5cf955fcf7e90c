//! The two elitist evolutionary algorithms under study, instrumented to
//! record the minimized fitness after every generation.

use crate::core_types::{flip_bits, BitString, RngStream};
use crate::problems::{MinimizedView, ProblemError};

/// Generation cap used when none is configured explicitly.
pub const DEFAULT_MAX_GENERATIONS: u64 = 10_000_000;

/// Survivor-selection rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Acceptance {
    /// (1+1) scheme: the single offspring replaces the parent when its raw
    /// fitness is greater than or equal to the parent's.
    AcceptGreaterOrEqual,
    /// (1+λ) scheme: the best offspring replaces the parent only when its
    /// raw fitness is strictly greater; ties keep the incumbent.
    StrictBestOfLambda,
}

/// Configuration of one EA run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EaConfig {
    lambda: u64,
    mutation_prob: f64,
    acceptance: Acceptance,
    max_generations: u64,
}

impl EaConfig {
    /// (1+1) EA with accept-on-equal selection.
    pub fn one_plus_one(mutation_prob: f64) -> Self {
        Self::new(1, mutation_prob, Acceptance::AcceptGreaterOrEqual, DEFAULT_MAX_GENERATIONS)
    }

    /// (1+λ) EA with strict best-of-λ selection.
    pub fn one_plus_lambda(lambda: u64, mutation_prob: f64) -> Self {
        Self::new(lambda, mutation_prob, Acceptance::StrictBestOfLambda, DEFAULT_MAX_GENERATIONS)
    }

    pub fn new(
        lambda: u64,
        mutation_prob: f64,
        acceptance: Acceptance,
        max_generations: u64,
    ) -> Self {
        assert!(lambda >= 1, "offspring count must be at least 1");
        assert!(
            acceptance != Acceptance::AcceptGreaterOrEqual || lambda == 1,
            "accept-on-equal selection is defined for a single offspring"
        );
        assert!(
            mutation_prob.is_finite() && (0.0..=1.0).contains(&mutation_prob),
            "mutation probability must lie in [0, 1]"
        );
        assert!(max_generations >= 1, "at least one generation must be allowed");
        EaConfig { lambda, mutation_prob, acceptance, max_generations }
    }

    pub fn with_max_generations(mut self, max_generations: u64) -> Self {
        assert!(max_generations >= 1, "at least one generation must be allowed");
        self.max_generations = max_generations;
        self
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mutation_prob(&self) -> f64 {
        self.mutation_prob
    }

    pub fn acceptance(&self) -> Acceptance {
        self.acceptance
    }

    pub fn max_generations(&self) -> u64 {
        self.max_generations
    }
}

/// Record of one run: the minimized fitness Y after every generation
/// (starting with the initial individual), whether the optimum was reached,
/// and enough bookkeeping to reproduce the run exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct RunTrace {
    /// Y_0, Y_1, …, Y_T — non-increasing by elitism.
    pub y_values: Vec<f64>,
    /// True iff the final Y value is 0.
    pub hit: bool,
    /// Outer-loop iterations performed, i.e. `y_values.len() - 1`.
    pub generations_used: u64,
    /// Offspring evaluations performed: λ per generation.
    pub evaluations: u64,
    /// (master seed, stream id) of the stream that drove the run.
    pub run_seed: (u64, u64),
}

impl RunTrace {
    pub fn final_y(&self) -> f64 {
        *self.y_values.last().expect("a trace always contains Y_0")
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum AlgorithmError {
    #[error("initial individual violates the problem constraints")]
    InfeasibleStart,
    #[error("optimum not reached within {} generations", trace.generations_used)]
    MaxGenerationsExceeded {
        /// The full non-hitting trace, for diagnostic consumers.
        trace: Box<RunTrace>,
    },
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

/// Runs the (1+1) EA: one mutant per generation, accepted when its raw
/// fitness is at least the parent's. Infeasible mutants are rejected,
/// which has the same effect as replacing them with the parent.
pub fn run_one_plus_one(
    problem: &MinimizedView,
    cfg: &EaConfig,
    x0: &BitString,
    rng: &mut RngStream,
) -> Result<RunTrace, AlgorithmError> {
    assert_eq!(
        cfg.acceptance,
        Acceptance::AcceptGreaterOrEqual,
        "run_one_plus_one requires accept-on-equal selection"
    );
    drive(problem, cfg, x0, rng, None)
}

/// Runs the (1+λ) EA: λ mutants per generation, the strictly best one (if
/// any beats the parent) becomes the next parent. Infeasible mutants stand
/// in for the parent and therefore never win the strict comparison.
pub fn run_one_plus_lambda(
    problem: &MinimizedView,
    cfg: &EaConfig,
    x0: &BitString,
    rng: &mut RngStream,
) -> Result<RunTrace, AlgorithmError> {
    assert_eq!(
        cfg.acceptance,
        Acceptance::StrictBestOfLambda,
        "run_one_plus_lambda requires strict best-of-lambda selection"
    );
    drive(problem, cfg, x0, rng, None)
}

/// Runs whichever EA `cfg` describes for exactly `generations` generations,
/// continuing past the optimum (where elitism keeps Y at 0). Used by the
/// conditional multiple-gain estimator.
pub fn run_fixed_generations(
    problem: &MinimizedView,
    cfg: &EaConfig,
    x0: &BitString,
    generations: u64,
    rng: &mut RngStream,
) -> Result<RunTrace, AlgorithmError> {
    drive(problem, cfg, x0, rng, Some(generations))
}

/// Shared driver. With `fixed = None` the run stops on hitting Y = 0 or
/// after `cfg.max_generations` (an error); with `fixed = Some(k)` exactly
/// k generations are performed unconditionally.
fn drive(
    problem: &MinimizedView,
    cfg: &EaConfig,
    x0: &BitString,
    rng: &mut RngStream,
    fixed: Option<u64>,
) -> Result<RunTrace, AlgorithmError> {
    let run_seed = rng.seed_pair();
    let (fx0, feasible) = problem.problem().evaluate(x0)?;
    if !feasible {
        return Err(AlgorithmError::InfeasibleStart);
    }
    let optimum = problem.optimum_fitness();
    let mut x = x0.clone();
    let mut fx = fx0;
    let mut y_values = vec![optimum - fx];
    let mut evaluations = 0u64;

    let generation_budget = fixed.unwrap_or(cfg.max_generations);
    for _ in 0..generation_budget {
        if fixed.is_none() && optimum - fx <= 0.0 {
            break;
        }
        let mut best: Option<BitString> = None;
        let mut best_f = fx;
        for _ in 0..cfg.lambda {
            let candidate = flip_bits(&x, cfg.mutation_prob, rng)
                .expect("mutation probability was validated at configuration time");
            evaluations += 1;
            let (fc, candidate_feasible) = problem.problem().evaluate(&candidate)?;
            if !candidate_feasible {
                continue;
            }
            let accept = match cfg.acceptance {
                Acceptance::AcceptGreaterOrEqual => fc >= best_f,
                Acceptance::StrictBestOfLambda => fc > best_f,
            };
            if accept {
                best = Some(candidate);
                best_f = fc;
            }
        }
        if let Some(winner) = best {
            x = winner;
            fx = best_f;
        }
        y_values.push(optimum - fx);
    }

    let hit = *y_values.last().expect("trace is non-empty") == 0.0;
    let trace = RunTrace {
        generations_used: (y_values.len() - 1) as u64,
        y_values,
        hit,
        evaluations,
        run_seed,
    };
    if fixed.is_none() && !trace.hit {
        return Err(AlgorithmError::MaxGenerationsExceeded { trace: Box::new(trace) });
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core_types::derive_stream;
    use crate::problems::{make_knapsack_b, make_maxsat_c, OneMaxProblem, Problem};

    fn onemax_view(n: usize) -> MinimizedView {
        MinimizedView::new(Problem::OneMax(OneMaxProblem::new(n))).unwrap()
    }

    #[test]
    fn deterministic_flip_hits_in_one_generation() {
        let view = onemax_view(1);
        let cfg = EaConfig::one_plus_one(1.0);
        let mut rng = derive_stream(7, 0);
        let trace = run_one_plus_one(&view, &cfg, &BitString::zeros(1), &mut rng).unwrap();
        assert_eq!(trace.y_values, vec![1.0, 0.0]);
        assert!(trace.hit);
        assert_eq!(trace.generations_used, 1);
        assert_eq!(trace.evaluations, 1);
    }

    #[test]
    fn identity_mutation_exhausts_budget() {
        let view = onemax_view(3);
        let cfg = EaConfig::one_plus_one(0.0).with_max_generations(25);
        let mut rng = derive_stream(7, 0);
        let err = run_one_plus_one(&view, &cfg, &BitString::zeros(3), &mut rng).unwrap_err();
        match err {
            AlgorithmError::MaxGenerationsExceeded { trace } => {
                assert!(!trace.hit);
                assert_eq!(trace.generations_used, 25);
                assert!(trace.y_values.iter().all(|&y| y == 3.0));
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn start_at_optimum_is_a_zero_length_run() {
        let view =
            MinimizedView::new(Problem::Knapsack(make_knapsack_b(10).unwrap())).unwrap();
        let cfg = EaConfig::one_plus_lambda(20, 0.1);
        let mut rng = derive_stream(7, 0);
        let x0: BitString = "1110000000".parse().unwrap();
        let trace = run_one_plus_lambda(&view, &cfg, &x0, &mut rng).unwrap();
        assert_eq!(trace.y_values, vec![0.0]);
        assert_eq!(trace.generations_used, 0);
        assert_eq!(trace.evaluations, 0);
    }

    #[test]
    fn strict_selection_never_accepts_equals() {
        let view = onemax_view(2);
        let cfg = EaConfig::one_plus_lambda(1, 0.0).with_max_generations(10);
        let mut rng = derive_stream(7, 0);
        let err = run_one_plus_lambda(&view, &cfg, &BitString::zeros(2), &mut rng).unwrap_err();
        assert!(matches!(err, AlgorithmError::MaxGenerationsExceeded { .. }));
    }

    #[test]
    fn infeasible_start_rejected() {
        let view =
            MinimizedView::new(Problem::Knapsack(make_knapsack_b(10).unwrap())).unwrap();
        let cfg = EaConfig::one_plus_lambda(20, 0.1);
        let mut rng = derive_stream(7, 0);
        let err =
            run_one_plus_lambda(&view, &cfg, &BitString::ones(10), &mut rng).unwrap_err();
        assert_eq!(err, AlgorithmError::InfeasibleStart);
    }

    #[test]
    fn traces_are_elitist_and_reproducible() {
        let view =
            MinimizedView::new(Problem::Knapsack(make_knapsack_b(8).unwrap())).unwrap();
        let cfg = EaConfig::one_plus_lambda(5, 0.125);
        let trace_a =
            run_one_plus_lambda(&view, &cfg, &BitString::zeros(8), &mut derive_stream(11, 3))
                .unwrap();
        let trace_b =
            run_one_plus_lambda(&view, &cfg, &BitString::zeros(8), &mut derive_stream(11, 3))
                .unwrap();
        assert_eq!(trace_a, trace_b);
        assert!(trace_a.y_values.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(trace_a.evaluations, 5 * trace_a.generations_used);
        assert_eq!(trace_a.run_seed, (11, 3));
    }

    #[test]
    fn onemax_one_plus_one_run_is_deterministic_too() {
        let view = onemax_view(12);
        let cfg = EaConfig::one_plus_one(1.0 / 12.0);
        let a = run_one_plus_one(&view, &cfg, &BitString::zeros(12), &mut derive_stream(5, 9))
            .unwrap();
        let b = run_one_plus_one(&view, &cfg, &BitString::zeros(12), &mut derive_stream(5, 9))
            .unwrap();
        assert_eq!(a, b);
        assert!(a.hit);
        assert_eq!(a.final_y(), 0.0);
    }

    #[test]
    fn fixed_generation_run_continues_past_the_optimum() {
        let view = onemax_view(1);
        let cfg = EaConfig::one_plus_one(1.0);
        let mut rng = derive_stream(7, 0);
        let trace =
            run_fixed_generations(&view, &cfg, &BitString::zeros(1), 4, &mut rng).unwrap();
        assert_eq!(trace.y_values, vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(trace.generations_used, 4);
        assert_eq!(trace.evaluations, 4);
    }

    #[test]
    fn maxsat_runs_behave() {
        let view = MinimizedView::new(Problem::MaxSat(make_maxsat_c(6).unwrap())).unwrap();
        let cfg = EaConfig::one_plus_lambda(20, 0.5);
        let mut x0 = BitString::ones(6);
        x0.set(0, false);
        let trace = run_one_plus_lambda(&view, &cfg, &x0, &mut derive_stream(3, 1)).unwrap();
        assert_eq!(trace.y_values[0], 5.0);
        assert!(trace.hit);
        assert!(trace.y_values.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    #[should_panic(expected = "accept-on-equal")]
    fn lambda_with_accept_on_equal_is_rejected() {
        let _ = EaConfig::new(2, 0.5, Acceptance::AcceptGreaterOrEqual, 100);
    }
}
