//! Problem families (bit-count, knapsack, MAX-SAT), their evaluators, the
//! minimized distance-to-optimum view consumed by the search algorithms,
//! and DIMACS CNF ingestion.

mod dimacs;
mod knapsack;
mod maxsat;
mod onemax;

pub use dimacs::{is_k_uniform, parse_dimacs, serialize_dimacs, DimacsError};
pub use knapsack::{
    knapsack_evaluate, make_knapsack_b, validate_favorably_correlated, KnapsackEvaluation,
    KnapsackInstance,
};
pub use maxsat::{make_maxsat_c, maxsat_evaluate, CnfFormula, Literal};
pub use onemax::{onemax_evaluate, OneMaxProblem};

use crate::core_types::{target_space_stats, BitString, TargetSpace, TargetSpaceError};

/// Default cap on exhaustive 2ⁿ enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ProblemError {
    #[error("expected a bit string of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("this instance family needs n >= {min}, got {got}")]
    InstanceTooSmall { min: usize, got: usize },
    #[error("exhaustive enumeration is limited to n <= {limit}, got n = {n}")]
    EnumerationTooLarge { n: usize, limit: usize },
    #[error("clause with no literals")]
    EmptyClause,
    #[error("literal references variable {var}, but the formula has {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },
    #[error(transparent)]
    TargetSpace(#[from] TargetSpaceError),
}

/// Any of the supported problem families, unified behind raw (maximized)
/// fitness and feasibility queries.
#[derive(Clone, Debug, PartialEq)]
pub enum Problem {
    OneMax(OneMaxProblem),
    Knapsack(KnapsackInstance),
    MaxSat(CnfFormula),
}

impl Problem {
    /// Encoding length.
    pub fn n(&self) -> usize {
        match self {
            Problem::OneMax(p) => p.n(),
            Problem::Knapsack(inst) => inst.n(),
            Problem::MaxSat(f) => f.num_vars(),
        }
    }

    /// Raw fitness to be maximized. Infeasible knapsack selections are
    /// still scored; callers decide what to do with them.
    pub fn raw_fitness(&self, x: &BitString) -> Result<f64, ProblemError> {
        match self {
            Problem::OneMax(p) => Ok(onemax_evaluate(p, x)? as f64),
            Problem::Knapsack(inst) => Ok(knapsack_evaluate(inst, x)?.value),
            Problem::MaxSat(f) => Ok(maxsat_evaluate(f, x)? as f64),
        }
    }

    /// Whether `x` satisfies the problem's constraints (only the knapsack
    /// capacity can fail).
    pub fn is_feasible(&self, x: &BitString) -> Result<bool, ProblemError> {
        Ok(self.evaluate(x)?.1)
    }

    /// Raw fitness and feasibility in a single pass.
    pub fn evaluate(&self, x: &BitString) -> Result<(f64, bool), ProblemError> {
        match self {
            Problem::OneMax(p) => Ok((onemax_evaluate(p, x)? as f64, true)),
            Problem::Knapsack(inst) => {
                let eval = knapsack_evaluate(inst, x)?;
                Ok((eval.value, eval.feasible))
            }
            Problem::MaxSat(f) => Ok((maxsat_evaluate(f, x)? as f64, true)),
        }
    }
}

/// A problem re-expressed as minimization of the distance to the optimum:
/// `y(x) = optimum_fitness − raw_fitness(x)`, which is zero exactly at an
/// optimal solution and non-negative on every feasible one.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimizedView {
    problem: Problem,
    optimum_fitness: f64,
}

impl MinimizedView {
    /// Builds the view, determining the optimum automatically: the
    /// bit-count problem's optimum is `n`; for the other families every
    /// feasible assignment is enumerated, which requires
    /// `n <= DEFAULT_ENUMERATION_LIMIT`. Beyond that, use
    /// [`MinimizedView::with_optimum`].
    pub fn new(problem: Problem) -> Result<Self, ProblemError> {
        let optimum_fitness = match &problem {
            Problem::OneMax(p) => p.n() as f64,
            _ => enumerate_target_space(&problem, DEFAULT_ENUMERATION_LIMIT)?.max_level(),
        };
        Ok(MinimizedView { problem, optimum_fitness })
    }

    /// Builds the view with a caller-supplied optimum, for instances too
    /// large to enumerate but whose optimum is known analytically.
    pub fn with_optimum(problem: Problem, optimum_fitness: f64) -> Self {
        MinimizedView { problem, optimum_fitness }
    }

    pub fn problem(&self) -> &Problem {
        &self.problem
    }

    pub fn optimum_fitness(&self) -> f64 {
        self.optimum_fitness
    }

    pub fn n(&self) -> usize {
        self.problem.n()
    }

    /// Distance to the optimum. Meaningful (non-negative) on feasible `x`.
    pub fn y(&self, x: &BitString) -> Result<f64, ProblemError> {
        Ok(self.optimum_fitness - self.problem.raw_fitness(x)?)
    }

    pub fn raw_fitness(&self, x: &BitString) -> Result<f64, ProblemError> {
        self.problem.raw_fitness(x)
    }

    pub fn is_feasible(&self, x: &BitString) -> Result<bool, ProblemError> {
        self.problem.is_feasible(x)
    }
}

/// Exhaustively evaluates every feasible assignment and returns the sorted
/// set of distinct fitness values with its gap statistics.
pub fn enumerate_target_space(
    problem: &Problem,
    limit: usize,
) -> Result<TargetSpace, ProblemError> {
    let n = problem.n();
    if n > limit {
        return Err(ProblemError::EnumerationTooLarge { n, limit });
    }
    let mut levels: Vec<f64> = Vec::new();
    for mask in 0..(1u64 << n) {
        let x = BitString::from_mask(mask, n);
        if problem.is_feasible(&x)? {
            levels.push(problem.raw_fitness(&x)?);
        }
    }
    levels.sort_by(|a, b| a.partial_cmp(b).expect("fitness values are finite"));
    levels.dedup();
    Ok(target_space_stats(&levels)?)
}
