//! Deterministic text artifacts: the per-campaign CSV table, the key/value
//! summary, and the figure series derived from a report.

use std::io::{self, Write};

use super::svg::Series;
use super::{check_criteria, ExperimentReport};

/// Formats a real with six significant digits: fixed notation for moderate
/// exponents, scientific otherwise, trailing zeros trimmed. Deterministic
/// for equal inputs.
pub fn sig6(x: f64) -> String {
    format_significant(x, 6)
}

fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let scientific = format!("{:.*e}", digits - 1, x);
    let (_, exponent) = scientific.split_once('e').expect("float e-notation");
    let exponent: i32 = exponent.parse().expect("float exponent");
    if exponent >= -4 && exponent < digits as i32 {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_trailing_zeros(format!("{x:.decimals$}"))
    } else {
        let (mantissa, _) = scientific.split_once('e').expect("float e-notation");
        format!("{}e{exponent}", trim_trailing_zeros(mantissa.to_string()))
    }
}

fn trim_trailing_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Writes the campaign table: a fixed header, then one line per cell in
/// grid order. LF line endings, UTF-8, reals at six significant digits;
/// equal reports serialize to identical bytes.
pub fn write_csv<W: Write>(report: &ExperimentReport, sink: &mut W) -> io::Result<()> {
    sink.write_all(b"n,runs,lambda,efht1,t0_mean,efht2,t0_max,k_hat,k_low,alpha,y0\n")?;
    for row in &report.rows {
        writeln!(
            sink,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.n,
            report.spec.runs,
            report.spec.lambda,
            sig6(row.efht1),
            sig6(row.t0_mean),
            sig6(row.efht2),
            row.t0_max,
            sig6(row.k_hat),
            sig6(row.k_low),
            sig6(row.alpha_used),
            sig6(row.y0),
        )?;
    }
    Ok(())
}

fn correlation_value(r: Option<f64>) -> String {
    r.map_or_else(|| "na".to_string(), sig6)
}

/// Writes the key/value campaign summary: a spec echo, the three grid
/// correlations, the six criteria with pass/fail, and the overall verdict.
/// Key order is fixed, so equal reports serialize identically.
pub fn write_summary<W: Write>(report: &ExperimentReport, sink: &mut W) -> io::Result<()> {
    let spec = &report.spec;
    writeln!(sink, "experiment = {}", spec.family)?;
    let grid: Vec<String> = spec.n_grid.iter().map(|n| n.to_string()).collect();
    writeln!(sink, "n_grid = {}", grid.join(","))?;
    writeln!(sink, "runs = {}", spec.runs)?;
    writeln!(sink, "lambda = {}", spec.lambda)?;
    writeln!(sink, "master_seed = {}", spec.master_seed)?;
    writeln!(sink, "max_generations = {}", spec.max_generations)?;
    writeln!(sink, "rows = {}", report.rows.len())?;
    writeln!(sink, "r_efht1_t0 = {}", correlation_value(report.r_efht1_t0))?;
    writeln!(sink, "r_efht2_tmax = {}", correlation_value(report.r_efht2_tmax))?;
    writeln!(sink, "r_khat_klow = {}", correlation_value(report.r_khat_klow))?;
    let criteria = check_criteria(report);
    let mut verdict = true;
    for criterion in &criteria {
        verdict &= criterion.passed;
        if criterion.passed {
            writeln!(sink, "{} = pass", criterion.name)?;
        } else {
            writeln!(sink, "{} = fail ({})", criterion.name, criterion.detail)?;
        }
    }
    writeln!(sink, "verdict = {}", if verdict { "pass" } else { "fail" })?;
    Ok(())
}

/// The three standard figure panels of a campaign, each a titled pair of
/// series over n: (a) closed-form EFHT bound vs observed mean hitting
/// time, (b) empirical worst-case bound vs observed maximum, (c) measured
/// mean stagnation vs its closed-form counterpart.
pub fn report_figures(report: &ExperimentReport) -> Vec<(String, Vec<Series>)> {
    let family = report.spec.family;
    let xs = |f: &dyn Fn(&super::ResultRow) -> f64| -> Vec<(f64, f64)> {
        report.rows.iter().map(|r| (r.n as f64, f(r))).collect()
    };
    vec![
        (
            format!("Experiment {family}: EFHT1 bound vs observed mean T0"),
            vec![
                Series::new("EFHT1", xs(&|r| r.efht1)),
                Series::new("T0 mean", xs(&|r| r.t0_mean)),
            ],
        ),
        (
            format!("Experiment {family}: EFHT2 bound vs observed max T0"),
            vec![
                Series::new("EFHT2", xs(&|r| r.efht2)),
                Series::new("T0 max", xs(&|r| r.t0_max as f64)),
            ],
        ),
        (
            format!("Experiment {family}: measured k_hat vs k_low"),
            vec![
                Series::new("k_hat", xs(&|r| r.k_hat)),
                Series::new("k_low", xs(&|r| r.k_low)),
            ],
        ),
    ]
}
