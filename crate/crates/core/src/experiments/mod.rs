//! Campaign harness: runs one of the three benchmark experiments over a
//! grid of encoding lengths, aggregates observed hitting-time statistics,
//! evaluates the matching closed-form bounds, and scores the
//! bound-versus-observation criteria.

mod output;
mod svg;

pub use output::{report_figures, sig6, write_csv, write_summary};
pub use svg::{render_svg, Series, SvgError};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algorithms::{
    run_one_plus_lambda, run_one_plus_one, AlgorithmError, EaConfig, RunTrace,
};
use crate::bounds::{
    knapsack_efht1, knapsack_klow, maxsat_efht1, maxsat_klow, onemax_efht1, onemax_klow,
    KnapsackBoundParams, MaxSatBoundParams,
};
use crate::core_types::{derive_stream, BitString};
use crate::instrumentation::{first_hitting_time, longest_zero_gain_run};
use crate::problems::{
    make_knapsack_b, make_maxsat_c, MinimizedView, OneMaxProblem, Problem, ProblemError,
};

/// Correlation strength threshold used by all "strong relationship" checks.
pub const CORRELATION_THRESHOLD: f64 = 0.91;

/// The three benchmark experiment families, conventionally labelled A, B
/// and C.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentFamily {
    /// A: bit counting, (1+1) EA, mutation probability 1/n.
    OneMax,
    /// B: capacity-3 knapsack, (1+λ) EA, mutation probability 1/n.
    Knapsack,
    /// C: agreement-forcing CNF, (1+λ) EA, mutation probability ½.
    MaxSat,
}

impl ExperimentFamily {
    pub fn letter(&self) -> char {
        match self {
            ExperimentFamily::OneMax => 'A',
            ExperimentFamily::Knapsack => 'B',
            ExperimentFamily::MaxSat => 'C',
        }
    }

    /// Smallest encoding length the family's generator accepts.
    pub fn min_n(&self) -> usize {
        match self {
            ExperimentFamily::OneMax => 1,
            ExperimentFamily::Knapsack => 5,
            ExperimentFamily::MaxSat => 2,
        }
    }
}

impl fmt::Display for ExperimentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for ExperimentFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "onemax" => Ok(ExperimentFamily::OneMax),
            "b" | "knapsack" => Ok(ExperimentFamily::Knapsack),
            "c" | "maxsat" => Ok(ExperimentFamily::MaxSat),
            other => Err(format!(
                "unknown experiment family {other:?}; expected A/onemax, B/knapsack or C/maxsat"
            )),
        }
    }
}

/// Full description of one campaign.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentSpec {
    pub family: ExperimentFamily,
    /// Strictly increasing encoding lengths, one cell per entry.
    pub n_grid: Vec<usize>,
    /// Independent runs per cell.
    pub runs: u64,
    /// Offspring per generation; ignored by the (1+1) family.
    pub lambda: u64,
    pub master_seed: u64,
    pub max_generations: u64,
}

/// Aggregated statistics and bound values for one cell (one n).
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub n: u64,
    /// Closed-form EFHT bound.
    pub efht1: f64,
    /// Mean observed first hitting time.
    pub t0_mean: f64,
    /// Empirical worst-case bound k̂·Y₀/α.
    pub efht2: f64,
    /// Largest observed first hitting time.
    pub t0_max: u64,
    /// Mean longest zero-gain stagnation.
    pub k_hat: f64,
    /// Closed-form stagnation quantity.
    pub k_low: f64,
    /// The minimal-gap value used to form efht2.
    pub alpha_used: f64,
    /// Initial distance to the optimum.
    pub y0: f64,
}

/// The four aggregate booleans summarizing a campaign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriteriaChecks {
    /// efht1 > t0_mean on every row.
    pub efht1_dominates: bool,
    /// efht2 > t0_max on every row.
    pub efht2_dominates: bool,
    /// k_hat > k_low on every row.
    pub khat_dominates: bool,
    /// All three grid correlations exist and exceed the threshold.
    pub correlations_strong: bool,
}

/// Campaign outcome: per-cell rows, grid-level correlations and checks.
/// Correlations are `None` when the grid has fewer than two cells or a
/// series is constant, in which case the strength check fails.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub spec: ExperimentSpec,
    pub rows: Vec<ResultRow>,
    pub r_efht1_t0: Option<f64>,
    pub r_efht2_tmax: Option<f64>,
    pub r_khat_klow: Option<f64>,
    pub checks: CriteriaChecks,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ExperimentError {
    #[error("invalid experiment specification: {0}")]
    InvalidSpec(&'static str),
    #[error("n = {n} is below the family minimum of {min}")]
    InstanceTooSmall { n: usize, min: usize },
    #[error("run {run} at n = {n} did not hit the optimum within {max_generations} generations")]
    MaxGenerationsExceeded { n: usize, run: u64, max_generations: u64 },
    #[error("run {run} at n = {n} failed: {message}")]
    RunFailed { n: usize, run: u64, message: String },
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PearsonError {
    #[error("series lengths differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("a series with zero variance has no correlation")]
    DegenerateVariance,
}

/// Sample Pearson correlation coefficient of two equal-length series.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, PearsonError> {
    if xs.len() != ys.len() {
        return Err(PearsonError::DimensionMismatch(xs.len(), ys.len()));
    }
    if xs.len() < 2 {
        return Err(PearsonError::DegenerateVariance);
    }
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(PearsonError::DegenerateVariance);
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Everything needed to execute one cell: the problem in minimized view,
/// the EA configuration, the fixed start point, and the cell's bound
/// values.
#[derive(Clone, Debug)]
pub struct CellConfig {
    pub family: ExperimentFamily,
    pub n: usize,
    pub view: MinimizedView,
    pub cfg: EaConfig,
    pub x0: BitString,
    pub y0: f64,
    pub alpha: f64,
    pub efht1: f64,
    pub k_low: f64,
}

impl CellConfig {
    /// Executes one run on the given stream with the family's algorithm.
    pub fn run(&self, rng: &mut crate::core_types::RngStream) -> Result<RunTrace, AlgorithmError> {
        match self.family {
            ExperimentFamily::OneMax => run_one_plus_one(&self.view, &self.cfg, &self.x0, rng),
            _ => run_one_plus_lambda(&self.view, &self.cfg, &self.x0, rng),
        }
    }
}

/// Builds the canonical per-cell setup for a family: instance, algorithm
/// configuration, fixed start point, and the matching bound values.
pub fn configure_cell(
    family: ExperimentFamily,
    n: usize,
    lambda: u64,
    max_generations: u64,
) -> Result<CellConfig, ExperimentError> {
    if n < family.min_n() {
        return Err(ExperimentError::InstanceTooSmall { n, min: family.min_n() });
    }
    if family != ExperimentFamily::OneMax && lambda < 1 {
        return Err(ExperimentError::InvalidSpec("offspring count must be at least 1"));
    }
    let cell = match family {
        ExperimentFamily::OneMax => {
            let view = MinimizedView::with_optimum(
                Problem::OneMax(OneMaxProblem::new(n)),
                n as f64,
            );
            CellConfig {
                family,
                n,
                cfg: EaConfig::one_plus_one(1.0 / n as f64)
                    .with_max_generations(max_generations),
                x0: BitString::zeros(n),
                y0: n as f64,
                alpha: 1.0,
                efht1: onemax_efht1(n as u64),
                k_low: onemax_klow(n as u64),
                view,
            }
        }
        ExperimentFamily::Knapsack => {
            let inst = make_knapsack_b(n)?;
            let view = MinimizedView::with_optimum(Problem::Knapsack(inst), 7.0);
            let params = KnapsackBoundParams {
                n: n as u64,
                lambda,
                q: 3,
                n_feasible: 4 * n as u64 - 4,
                d_min: 2.0,
                v_min: 1.0,
                y0: 7.0,
                beta: 2.0,
            };
            CellConfig {
                family,
                n,
                cfg: EaConfig::one_plus_lambda(lambda, 1.0 / n as f64)
                    .with_max_generations(max_generations),
                x0: BitString::zeros(n),
                y0: 7.0,
                alpha: 1.0,
                efht1: knapsack_efht1(&params).expect("benchmark parameters are valid"),
                k_low: knapsack_klow(&params).expect("benchmark parameters are valid"),
                view,
            }
        }
        ExperimentFamily::MaxSat => {
            let formula = make_maxsat_c(n)?;
            let optimum = 2.0 * (n as f64 - 1.0);
            let view = MinimizedView::with_optimum(Problem::MaxSat(formula), optimum);
            let params = MaxSatBoundParams {
                n: n as u64,
                lambda,
                n_opt: 2,
                s: 2 * (n as u64 - 1),
                beta: 1.0,
            };
            let mut x0 = BitString::ones(n);
            x0.set(0, false);
            CellConfig {
                family,
                n,
                cfg: EaConfig::one_plus_lambda(lambda, 0.5)
                    .with_max_generations(max_generations),
                x0,
                y0: n as f64 - 1.0,
                alpha: 1.0,
                efht1: maxsat_efht1(&params).expect("benchmark parameters are valid"),
                k_low: maxsat_klow(&params).expect("benchmark parameters are valid"),
                view,
            }
        }
    };
    debug_assert_eq!(
        cell.view.y(&cell.x0).expect("start point matches the instance"),
        cell.y0,
        "configured Y0 must match the evaluated start point"
    );
    Ok(cell)
}

fn validate_spec(spec: &ExperimentSpec) -> Result<(), ExperimentError> {
    if spec.n_grid.is_empty() {
        return Err(ExperimentError::InvalidSpec("the n grid cannot be empty"));
    }
    if !spec.n_grid.windows(2).all(|w| w[0] < w[1]) {
        return Err(ExperimentError::InvalidSpec("the n grid must be strictly increasing"));
    }
    if spec.runs < 1 {
        return Err(ExperimentError::InvalidSpec("at least one run per cell is required"));
    }
    if spec.max_generations < 1 {
        return Err(ExperimentError::InvalidSpec("at least one generation must be allowed"));
    }
    Ok(())
}

/// Stream id for a given cell and run. Cells use disjoint id ranges so no
/// random numbers are shared between cells.
fn stream_id(cell_idx: usize, run_idx: u64) -> u64 {
    ((cell_idx as u64) << 32) | run_idx
}

/// Executes the campaign described by `spec`: every cell runs
/// `spec.runs` independent traces on disjoint derived streams, rows are
/// aggregated in run order (so the result is independent of scheduling),
/// and grid-level correlations and checks are computed at the end.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport, ExperimentError> {
    validate_spec(spec)?;
    assert!(spec.runs <= u32::MAX as u64, "run index must fit the stream id layout");

    let mut rows = Vec::with_capacity(spec.n_grid.len());
    for (cell_idx, &n) in spec.n_grid.iter().enumerate() {
        let cell = configure_cell(spec.family, n, spec.lambda, spec.max_generations)?;
        let per_run: Vec<(u64, u64)> = (0..spec.runs)
            .into_par_iter()
            .map(|run_idx| -> Result<(u64, u64), ExperimentError> {
                let mut rng = derive_stream(spec.master_seed, stream_id(cell_idx, run_idx));
                let trace = cell.run(&mut rng).map_err(|e| match e {
                    AlgorithmError::MaxGenerationsExceeded { .. } => {
                        ExperimentError::MaxGenerationsExceeded {
                            n,
                            run: run_idx,
                            max_generations: spec.max_generations,
                        }
                    }
                    other => ExperimentError::RunFailed {
                        n,
                        run: run_idx,
                        message: other.to_string(),
                    },
                })?;
                let t0 = first_hitting_time(&trace, 0.0)
                    .expect("completed runs always hit the optimum");
                Ok((t0, longest_zero_gain_run(&trace)))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let runs = spec.runs as f64;
        let t0_sum: u64 = per_run.iter().map(|&(t0, _)| t0).sum();
        let t0_max = per_run.iter().map(|&(t0, _)| t0).max().expect("runs >= 1");
        let k_sum: u64 = per_run.iter().map(|&(_, k)| k).sum();
        let t0_mean = t0_sum as f64 / runs;
        let k_hat = k_sum as f64 / runs;
        let efht2 = k_hat * cell.y0 / cell.alpha;
        debug_assert!(t0_mean <= t0_max as f64);
        rows.push(ResultRow {
            n: n as u64,
            efht1: cell.efht1,
            t0_mean,
            efht2,
            t0_max,
            k_hat,
            k_low: cell.k_low,
            alpha_used: cell.alpha,
            y0: cell.y0,
        });
    }

    let grid_corr = |xs: Vec<f64>, ys: Vec<f64>| pearson(&xs, &ys).ok();
    let r_efht1_t0 = grid_corr(
        rows.iter().map(|r| r.efht1).collect(),
        rows.iter().map(|r| r.t0_mean).collect(),
    );
    let r_efht2_tmax = grid_corr(
        rows.iter().map(|r| r.efht2).collect(),
        rows.iter().map(|r| r.t0_max as f64).collect(),
    );
    let r_khat_klow = grid_corr(
        rows.iter().map(|r| r.k_hat).collect(),
        rows.iter().map(|r| r.k_low).collect(),
    );

    let strong = |r: Option<f64>| r.is_some_and(|v| v > CORRELATION_THRESHOLD);
    let checks = CriteriaChecks {
        efht1_dominates: rows.iter().all(|r| r.efht1 > r.t0_mean),
        efht2_dominates: rows.iter().all(|r| r.efht2 > r.t0_max as f64),
        khat_dominates: rows.iter().all(|r| r.k_hat > r.k_low),
        correlations_strong: strong(r_efht1_t0) && strong(r_efht2_tmax) && strong(r_khat_klow),
    };

    Ok(ExperimentReport {
        spec: spec.clone(),
        rows,
        r_efht1_t0,
        r_efht2_tmax,
        r_khat_klow,
        checks,
    })
}

/// Outcome of one of the six campaign criteria.
#[derive(Clone, Debug, PartialEq)]
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn dominance_criterion(
    name: &'static str,
    rows: &[ResultRow],
    holds: impl Fn(&ResultRow) -> bool,
    describe: impl Fn(&ResultRow) -> String,
) -> CriterionResult {
    let offenders: Vec<String> =
        rows.iter().filter(|r| !holds(r)).map(|r| format!("n={}: {}", r.n, describe(r))).collect();
    CriterionResult {
        name,
        passed: offenders.is_empty(),
        detail: if offenders.is_empty() {
            format!("holds on all {} rows", rows.len())
        } else {
            offenders.join("; ")
        },
    }
}

fn correlation_criterion(name: &'static str, r: Option<f64>) -> CriterionResult {
    match r {
        Some(value) => CriterionResult {
            name,
            passed: value > CORRELATION_THRESHOLD,
            detail: format!("r = {} vs threshold {}", sig6(value), CORRELATION_THRESHOLD),
        },
        None => CriterionResult {
            name,
            passed: false,
            detail: "correlation undefined (fewer than two cells or constant series)".to_string(),
        },
    }
}

/// Scores the six campaign criteria: three pointwise dominance families
/// and three grid-correlation strengths.
pub fn check_criteria(report: &ExperimentReport) -> Vec<CriterionResult> {
    vec![
        dominance_criterion(
            "efht1_dominates_t0_mean",
            &report.rows,
            |r| r.efht1 > r.t0_mean,
            |r| format!("efht1 {} <= t0_mean {}", sig6(r.efht1), sig6(r.t0_mean)),
        ),
        dominance_criterion(
            "efht2_dominates_t0_max",
            &report.rows,
            |r| r.efht2 > r.t0_max as f64,
            |r| format!("efht2 {} <= t0_max {}", sig6(r.efht2), r.t0_max),
        ),
        dominance_criterion(
            "khat_dominates_klow",
            &report.rows,
            |r| r.k_hat > r.k_low,
            |r| format!("k_hat {} <= k_low {}", sig6(r.k_hat), sig6(r.k_low)),
        ),
        correlation_criterion("r_efht1_t0_strong", report.r_efht1_t0),
        correlation_criterion("r_efht2_tmax_strong", report.r_efht2_tmax),
        correlation_criterion("r_khat_klow_strong", report.r_khat_klow),
    ]
}
