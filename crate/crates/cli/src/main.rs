//! `efht` — command-line front end for the runtime-analysis laboratory.
//!
//! Subcommands: `experiment` (replicated campaigns with CSV/summary/figure
//! artifacts), `bounds` (closed-form EFHT bound calculators), `run` (a
//! single instrumented trace), `oracle` (exact small-instance EFHT values),
//! and `gain` (Monte-Carlo multiple-gain estimation).
//!
//! Exit codes: 0 success (and, for `experiment`, all campaign criteria
//! pass), 1 campaign completed but criteria failed, 2 usage or
//! configuration error, 3 runtime error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use efht_core::algorithms::EaConfig;
use efht_core::bounds::{
    knapsack_efht1, knapsack_klow, maxsat_efht1, maxsat_klow, onemax_efht1, onemax_klow,
    worst_case_bound, KnapsackBoundParams, MaxSatBoundParams,
};
use efht_core::core_types::{derive_stream, BitString};
use efht_core::experiments::{
    configure_cell, report_figures, run_experiment, sig6, write_csv, write_summary,
    ExperimentError, ExperimentFamily, ExperimentSpec,
};
use efht_core::instrumentation::{
    empirical_multiple_gain, first_hitting_time, longest_zero_gain_run,
};
use efht_core::oracle::{knapsack_exact_efht, maxsat_c_exact_efht, onemax_exact_efht};
use efht_core::problems::{make_knapsack_b, parse_dimacs, MinimizedView, Problem};

/// Laboratory from the command line: campaigns, bounds, traces, oracles.
#[derive(Parser)]
#[command(name = "efht", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a replicated campaign over a grid of encoding lengths and
    /// check the bound-dominance and correlation criteria.
    Experiment(ExperimentArgs),
    /// Evaluate the closed-form EFHT bound and k_low for one setting.
    Bounds(BoundsCommand),
    /// Execute one instrumented run and print its Y-sequence.
    Run(RunArgs),
    /// Print the exact expected first hitting time of a small instance,
    /// computed from its absorbing Markov chain.
    Oracle(OracleArgs),
    /// Estimate the expected k-generation gain from a fixed start point.
    Gain(GainArgs),
}

#[derive(Args)]
struct ExperimentArgs {
    /// Experiment family: A/onemax, B/knapsack or C/maxsat.
    #[arg(value_parser = parse_family)]
    family: ExperimentFamily,
    /// Encoding-length grid lo:hi[:step], inclusive on both ends.
    #[arg(long, value_parser = parse_range)]
    n: NRange,
    /// Independent runs per grid cell.
    #[arg(long, default_value_t = 1000)]
    runs: u64,
    /// Master seed; every run derives its own stream from it.
    #[arg(long)]
    seed: u64,
    /// Offspring per generation (default: 1 for family A, 20 for B and C).
    #[arg(long)]
    lambda: Option<u64>,
    /// Abort any run exceeding this many generations.
    #[arg(long, default_value_t = 100_000_000)]
    max_generations: u64,
    /// Directory for results_<X>.csv, summary_<X>.txt and figure files.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsCommand {
    #[command(subcommand)]
    problem: BoundsProblem,
}

#[derive(Subcommand)]
enum BoundsProblem {
    /// Bit-counting problem, (1+1) EA with mutation probability 1/n.
    Onemax {
        /// Encoding length.
        #[arg(long)]
        n: u64,
    },
    /// Capacity-3 knapsack benchmark, (1+λ) EA with mutation probability 1/n.
    Knapsack {
        /// Encoding length (at least 5).
        #[arg(long)]
        n: u64,
        /// Offspring per generation.
        #[arg(long, default_value_t = 20)]
        lambda: u64,
    },
    /// Two-literal CNF benchmark (or a DIMACS file), (1+λ) EA with
    /// mutation probability ½.
    Maxsat {
        /// Number of variables of the built-in agreement formula.
        #[arg(long, required_unless_present = "cnf", conflicts_with = "cnf")]
        n: Option<u64>,
        /// Offspring per generation.
        #[arg(long, default_value_t = 20)]
        lambda: u64,
        /// DIMACS CNF file replacing the built-in formula.
        #[arg(long, requires = "n_opt", requires = "y0")]
        cnf: Option<PathBuf>,
        /// Number of global optima of the supplied formula.
        #[arg(long)]
        n_opt: Option<u64>,
        /// Initial distance to the optimum for the worst-case bound.
        #[arg(long)]
        y0: Option<f64>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Experiment family: A/onemax, B/knapsack or C/maxsat.
    #[arg(value_parser = parse_family)]
    family: ExperimentFamily,
    /// Encoding length. With --cnf the formula fixes it instead.
    #[arg(long, required_unless_present = "cnf", conflicts_with = "cnf")]
    n: Option<usize>,
    /// Seed of this run's stream.
    #[arg(long)]
    seed: u64,
    /// Offspring per generation (default: 1 for family A, 20 for B and C).
    #[arg(long)]
    lambda: Option<u64>,
    /// Abort the run after this many generations.
    #[arg(long, default_value_t = 100_000_000)]
    max_generations: u64,
    /// DIMACS CNF file replacing the built-in formula (family C only).
    #[arg(long, requires = "n_opt", requires = "y0")]
    cnf: Option<PathBuf>,
    /// Number of global optima of the supplied formula.
    #[arg(long)]
    n_opt: Option<u64>,
    /// Distance from the all-zeros start to the optimum of the supplied
    /// formula.
    #[arg(long)]
    y0: Option<f64>,
}

#[derive(Args)]
struct OracleArgs {
    /// Experiment family: A/onemax, B/knapsack or C/maxsat.
    #[arg(value_parser = parse_family)]
    family: ExperimentFamily,
    /// Encoding length (family ranges: A ≤ 20, B ≤ 8, C ≤ 25).
    #[arg(long)]
    n: u64,
    /// Offspring per generation (default: 1 for family A, 20 for B and C).
    #[arg(long)]
    lambda: Option<u64>,
}

#[derive(Args)]
struct GainArgs {
    /// Experiment family: A/onemax, B/knapsack or C/maxsat.
    #[arg(value_parser = parse_family)]
    family: ExperimentFamily,
    /// Encoding length.
    #[arg(long)]
    n: usize,
    /// Gain horizon: generations between the two compared states.
    #[arg(long)]
    k: u64,
    /// Monte-Carlo sample count.
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// Master seed for the sample streams.
    #[arg(long)]
    seed: u64,
    /// Offspring per generation (default: 1 for family A, 20 for B and C).
    #[arg(long)]
    lambda: Option<u64>,
    /// Start from a point at this distance instead of the family's
    /// canonical start (family A only; its levels are symmetric).
    #[arg(long)]
    distance: Option<u64>,
}

/// Inclusive grid lo:hi[:step].
#[derive(Clone, Copy, Debug)]
struct NRange {
    lo: usize,
    hi: usize,
    step: usize,
}

impl NRange {
    fn values(&self) -> Vec<usize> {
        (self.lo..=self.hi).step_by(self.step).collect()
    }
}

fn parse_range(text: &str) -> Result<NRange, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let parse = |s: &str, what: &str| -> Result<usize, String> {
        s.parse::<usize>().map_err(|_| format!("invalid {what} {s:?} in range {text:?}"))
    };
    let (lo, hi, step) = match parts.as_slice() {
        [single] => {
            let v = parse(single, "value")?;
            (v, v, 1)
        }
        [lo, hi] => (parse(lo, "lower end")?, parse(hi, "upper end")?, 1),
        [lo, hi, step] => (parse(lo, "lower end")?, parse(hi, "upper end")?, parse(step, "step")?),
        _ => return Err(format!("range {text:?} must have the form lo:hi[:step]")),
    };
    if lo < 1 {
        return Err("the lower end of the range must be at least 1".to_string());
    }
    if lo > hi {
        return Err(format!("empty range {text:?}: lower end exceeds upper end"));
    }
    if step < 1 {
        return Err("the range step must be at least 1".to_string());
    }
    Ok(NRange { lo, hi, step })
}

fn parse_family(text: &str) -> Result<ExperimentFamily, String> {
    ExperimentFamily::from_str(text)
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    /// Invalid configuration or input: exit code 2.
    #[error("{0}")]
    Config(String),
    /// Failure while executing a valid request: exit code 3.
    #[error("{0}")]
    Runtime(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::InvalidSpec(_)
            | ExperimentError::InstanceTooSmall { .. }
            | ExperimentError::Problem(_) => CliError::Config(e.to_string()),
            ExperimentError::MaxGenerationsExceeded { .. }
            | ExperimentError::RunFailed { .. } => CliError::Runtime(e.to_string()),
        }
    }
}

fn config_err<T>(message: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Config(message.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_thread_pool() {
        eprintln!("error: {e}");
        return ExitCode::from(exit_code_for(&e));
    }
    let outcome = match cli.command {
        Command::Experiment(args) => cmd_experiment(&args),
        Command::Bounds(args) => cmd_bounds(&args.problem).map(|()| true),
        Command::Run(args) => cmd_run(&args).map(|()| true),
        Command::Oracle(args) => cmd_oracle(&args).map(|()| true),
        Command::Gain(args) => cmd_gain(&args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Config(_) => 2,
        CliError::Runtime(_) => 3,
    }
}

/// Honors the optional EFHT_THREADS cap on worker parallelism.
fn init_thread_pool() -> Result<(), CliError> {
    let Some(raw) = std::env::var_os("EFHT_THREADS") else {
        return Ok(());
    };
    let text = raw.to_string_lossy();
    let threads: usize = text
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| {
            CliError::Config(format!(
                "EFHT_THREADS must be a positive integer, got {text:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Runtime(format!("failed to configure the thread pool: {e}")))
}

/// Canonical offspring count per family when --lambda is absent.
fn resolve_lambda(family: ExperimentFamily, lambda: Option<u64>) -> Result<u64, CliError> {
    match (family, lambda) {
        (ExperimentFamily::OneMax, None | Some(1)) => Ok(1),
        (ExperimentFamily::OneMax, Some(l)) => config_err(format!(
            "family A runs the (1+1) EA; --lambda {l} is not applicable"
        )),
        (_, None) => Ok(20),
        (_, Some(0)) => config_err("--lambda must be at least 1"),
        (_, Some(l)) => Ok(l),
    }
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<bool, CliError> {
    let lambda = resolve_lambda(args.family, args.lambda)?;
    if args.runs < 1 {
        return config_err("--runs must be at least 1");
    }
    if args.runs > u32::MAX as u64 {
        return config_err("--runs must fit in 32 bits");
    }
    let spec = ExperimentSpec {
        family: args.family,
        n_grid: args.n.values(),
        runs: args.runs,
        lambda,
        master_seed: args.seed,
        max_generations: args.max_generations,
    };
    let report = run_experiment(&spec)?;

    let mut summary = Vec::new();
    write_summary(&report, &mut summary)?;
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(&summary)?;

    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        let letter = spec.family.letter();
        write_file(&dir.join(format!("results_{letter}.csv")), |sink| {
            write_csv(&report, sink)
        })?;
        write_file(&dir.join(format!("summary_{letter}.txt")), |sink| {
            sink.write_all(&summary)
        })?;
        let figures = report_figures(&report);
        if report.rows.len() >= 2 {
            for (idx, (title, series)) in figures.iter().enumerate() {
                let panel = (b'a' + idx as u8) as char;
                let path = dir.join(format!("figure_{letter}_{panel}.svg"));
                write_file(&path, |sink| {
                    efht_core::experiments::render_svg(series, title, sink).map_err(|e| match e {
                        efht_core::experiments::SvgError::Io(io) => io,
                        other => std::io::Error::other(other.to_string()),
                    })
                })?;
            }
        } else {
            writeln!(stdout, "note = figures skipped (grid has fewer than two cells)")?;
        }
    }

    let checks = report.checks;
    Ok(checks.efht1_dominates
        && checks.efht2_dominates
        && checks.khat_dominates
        && checks.correlations_strong)
}

fn write_file(
    path: &Path,
    write: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
) -> Result<(), CliError> {
    let mut sink = BufWriter::new(File::create(path)?);
    write(&mut sink)?;
    sink.flush()?;
    Ok(())
}

fn cmd_bounds(problem: &BoundsProblem) -> Result<(), CliError> {
    let lines = match problem {
        BoundsProblem::Onemax { n } => {
            if *n < 1 {
                return config_err("--n must be at least 1");
            }
            vec![
                ("efht1", sig6(onemax_efht1(*n))),
                ("k_low", sig6(onemax_klow(*n))),
            ]
        }
        BoundsProblem::Knapsack { n, lambda } => {
            if *n < 5 {
                return config_err("the knapsack benchmark needs --n of at least 5");
            }
            let params = KnapsackBoundParams {
                n: *n,
                lambda: *lambda,
                q: 3,
                n_feasible: 4 * n - 4,
                d_min: 2.0,
                v_min: 1.0,
                y0: 7.0,
                beta: 2.0,
            };
            let efht1 = knapsack_efht1(&params).map_err(|e| CliError::Config(e.to_string()))?;
            let k_low = knapsack_klow(&params).map_err(|e| CliError::Config(e.to_string()))?;
            vec![("efht1", sig6(efht1)), ("k_low", sig6(k_low))]
        }
        BoundsProblem::Maxsat { n, lambda, cnf, n_opt, y0 } => {
            let params = match cnf {
                None => {
                    let n = n.expect("clap requires --n without --cnf");
                    if n < 2 {
                        return config_err("the CNF benchmark needs --n of at least 2");
                    }
                    MaxSatBoundParams { n, lambda: *lambda, n_opt: 2, s: 2 * (n - 1), beta: 1.0 }
                }
                Some(path) => {
                    let formula = load_cnf(path)?;
                    let n_opt = n_opt.expect("clap requires --n-opt with --cnf");
                    if n_opt < 1 {
                        return config_err("--n-opt must be at least 1");
                    }
                    MaxSatBoundParams {
                        n: formula.num_vars() as u64,
                        lambda: *lambda,
                        n_opt,
                        s: formula.s() as u64,
                        beta: 1.0,
                    }
                }
            };
            let efht1 = maxsat_efht1(&params).map_err(|e| CliError::Config(e.to_string()))?;
            let k_low = maxsat_klow(&params).map_err(|e| CliError::Config(e.to_string()))?;
            let mut lines = vec![("efht1", sig6(efht1)), ("k_low", sig6(k_low))];
            if let Some(y0) = y0 {
                if !(*y0 >= 0.0) {
                    return config_err("--y0 cannot be negative");
                }
                let worst = worst_case_bound(k_low, *y0, 1.0)
                    .map_err(|e| CliError::Config(e.to_string()))?;
                lines.push(("worst_case", sig6(worst)));
            }
            lines
        }
    };
    let mut stdout = std::io::stdout().lock();
    for (key, value) in lines {
        writeln!(stdout, "{key} = {value}")?;
    }
    Ok(())
}

fn load_cnf(path: &Path) -> Result<efht_core::problems::CnfFormula, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_dimacs(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// The per-run setup shared by `run` and `gain`: a minimized view, the
/// family's algorithm configuration, the start point, and the matching
/// closed-form bound for context.
struct SingleSetup {
    view: MinimizedView,
    cfg: EaConfig,
    x0: BitString,
    efht1: f64,
    n: usize,
}

fn configure_single(
    family: ExperimentFamily,
    n: usize,
    lambda: u64,
    max_generations: u64,
) -> Result<SingleSetup, CliError> {
    let cell = configure_cell(family, n, lambda, max_generations)?;
    Ok(SingleSetup { view: cell.view, cfg: cell.cfg, x0: cell.x0, efht1: cell.efht1, n })
}

fn configure_external_cnf(
    path: &Path,
    n_opt: u64,
    y0: f64,
    lambda: u64,
    max_generations: u64,
) -> Result<SingleSetup, CliError> {
    let formula = load_cnf(path)?;
    if n_opt < 1 {
        return config_err("--n-opt must be at least 1");
    }
    if !(y0 >= 0.0) || y0.fract() != 0.0 {
        return config_err("--y0 must be a non-negative whole number of clauses");
    }
    let n = formula.num_vars();
    let s = formula.s() as u64;
    let params = MaxSatBoundParams { n: n as u64, lambda, n_opt, s, beta: 1.0 };
    let efht1 = maxsat_efht1(&params).map_err(|e| CliError::Config(e.to_string()))?;
    let problem = Problem::MaxSat(formula);
    let x0 = BitString::zeros(n);
    let start_fitness = problem
        .raw_fitness(&x0)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let optimum = start_fitness + y0;
    if optimum > s as f64 {
        return config_err(format!(
            "--y0 {y0} puts the optimum above the clause count {s} (start satisfies {start_fitness})"
        ));
    }
    let view = MinimizedView::with_optimum(problem, optimum);
    let cfg = EaConfig::one_plus_lambda(lambda, 0.5).with_max_generations(max_generations);
    Ok(SingleSetup { view, cfg, x0, efht1, n })
}

fn cmd_run(args: &RunArgs) -> Result<(), CliError> {
    let lambda = resolve_lambda(args.family, args.lambda)?;
    let setup = match &args.cnf {
        None => {
            let n = args.n.expect("clap requires --n without --cnf");
            configure_single(args.family, n, lambda, args.max_generations)?
        }
        Some(path) => {
            if args.family != ExperimentFamily::MaxSat {
                return config_err("--cnf applies only to family C/maxsat");
            }
            configure_external_cnf(
                path,
                args.n_opt.expect("clap requires --n-opt with --cnf"),
                args.y0.expect("clap requires --y0 with --cnf"),
                lambda,
                args.max_generations,
            )?
        }
    };

    let mut rng = derive_stream(args.seed, 0);
    let trace = match args.family {
        ExperimentFamily::OneMax => {
            efht_core::algorithms::run_one_plus_one(&setup.view, &setup.cfg, &setup.x0, &mut rng)
        }
        _ => efht_core::algorithms::run_one_plus_lambda(&setup.view, &setup.cfg, &setup.x0, &mut rng),
    }
    .map_err(|e| CliError::Runtime(e.to_string()))?;

    let mut stdout = std::io::stdout().lock();
    writeln!(
        stdout,
        "family = {}\nn = {}\nlambda = {}\nseed = {}",
        args.family, setup.n, lambda, args.seed
    )?;
    writeln!(stdout, "efht1 = {}", sig6(setup.efht1))?;
    writeln!(
        stdout,
        "hit = {}\ngenerations = {}\nevaluations = {}",
        trace.hit, trace.generations_used, trace.evaluations
    )?;
    writeln!(stdout, "t0 = {}", first_hitting_time(&trace, 0.0).map_or_else(
        |_| "not reached".to_string(),
        |t| t.to_string(),
    ))?;
    writeln!(stdout, "longest_zero_gain_run = {}", longest_zero_gain_run(&trace))?;
    let sequence: Vec<String> = trace.y_values.iter().map(|&y| sig6(y)).collect();
    writeln!(stdout, "y_sequence = {}", sequence.join(" "))?;
    Ok(())
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let lambda = resolve_lambda(args.family, args.lambda)?;
    let exact = match args.family {
        ExperimentFamily::OneMax => onemax_exact_efht(args.n),
        ExperimentFamily::Knapsack => {
            let n = args.n as usize;
            let inst =
                make_knapsack_b(n).map_err(|e| CliError::Config(e.to_string()))?;
            knapsack_exact_efht(&inst, lambda, &BitString::zeros(n))
        }
        ExperimentFamily::MaxSat => maxsat_c_exact_efht(args.n, lambda),
    }
    .map_err(|e| CliError::Config(e.to_string()))?;
    println!("exact_efht = {exact}");
    Ok(())
}

fn cmd_gain(args: &GainArgs) -> Result<(), CliError> {
    let lambda = resolve_lambda(args.family, args.lambda)?;
    if args.k < 1 {
        return config_err("--k must be at least 1");
    }
    if args.samples < 1 {
        return config_err("--samples must be at least 1");
    }
    let setup = configure_single(args.family, args.n, lambda, u64::MAX)?;
    let x = match args.distance {
        None => setup.x0.clone(),
        Some(r) => {
            if args.family != ExperimentFamily::OneMax {
                return config_err(
                    "--distance is only meaningful for family A, whose levels are symmetric",
                );
            }
            if r < 1 || r > args.n as u64 {
                return config_err("--distance must lie in 1..=n");
            }
            // Any point at distance r is equivalent by symmetry.
            BitString::from_mask((1u64 << (args.n as u64 - r)) - 1, args.n)
        }
    };
    let mut rng = derive_stream(args.seed, 0);
    let estimate = empirical_multiple_gain(&setup.view, &setup.cfg, &x, args.k, args.samples, &mut rng)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let mut stdout = std::io::stdout().lock();
    writeln!(stdout, "family = {}\nn = {}\nk = {}\nsamples = {}", args.family, args.n, args.k, args.samples)?;
    writeln!(stdout, "gain_mean = {}", estimate.mean)?;
    writeln!(stdout, "gain_stderr = {}", estimate.stderr)?;
    Ok(())
}

/// Guard against accidental drift in the usage surface; the full behavior
/// is exercised end-to-end in the integration tests.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r = parse_range("10:30").unwrap();
        assert_eq!((r.lo, r.hi, r.step), (10, 30, 1));
        assert_eq!(r.values().len(), 21);
        let r = parse_range("5:15:5").unwrap();
        assert_eq!(r.values(), vec![5, 10, 15]);
        let r = parse_range("7").unwrap();
        assert_eq!(r.values(), vec![7]);
        assert!(parse_range("30:10").is_err());
        assert!(parse_range("10:20:0").is_err());
        assert!(parse_range("0:5").is_err());
        assert!(parse_range("a:b").is_err());
        assert!(parse_range("1:2:3:4").is_err());
    }

    #[test]
    fn lambda_resolution() {
        assert_eq!(resolve_lambda(ExperimentFamily::OneMax, None).unwrap(), 1);
        assert_eq!(resolve_lambda(ExperimentFamily::OneMax, Some(1)).unwrap(), 1);
        assert!(resolve_lambda(ExperimentFamily::OneMax, Some(2)).is_err());
        assert_eq!(resolve_lambda(ExperimentFamily::Knapsack, None).unwrap(), 20);
        assert_eq!(resolve_lambda(ExperimentFamily::MaxSat, Some(7)).unwrap(), 7);
        assert!(resolve_lambda(ExperimentFamily::MaxSat, Some(0)).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
