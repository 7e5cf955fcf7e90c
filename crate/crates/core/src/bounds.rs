//! Closed-form upper bounds on the expected first hitting time (EFHT) of
//! the two elitist EAs, plus the matching stagnation-length quantities
//! (`k_low`) used by the experiment harness.
//!
//! Two bound styles appear throughout:
//! * an `efht1`-style bound built from a per-level gain lower bound, and
//! * the coarser `worst_case_bound` k·Y₀/α, whose empirical counterpart is
//!   formed by substituting the measured mean stagnation length for k.

use crate::core_types::TargetSpace;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum BoundsError {
    #[error("gain lower bound h must be positive and non-decreasing across the levels")]
    InvalidGainBound,
    #[error("alpha must be strictly positive, got {0}")]
    InvalidAlpha(f64),
    #[error("beta must be strictly positive, got {0}")]
    InvalidBeta(f64),
    #[error("offspring count lambda must be at least 1")]
    InvalidLambda,
    #[error("bound evaluation left its numerical domain: {0}")]
    NumericalDomain(&'static str),
}

/// Parameters of the knapsack bounds for instances with favorably
/// correlated weights.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KnapsackBoundParams {
    /// Encoding length.
    pub n: u64,
    /// Offspring per generation.
    pub lambda: u64,
    /// Number of one-bits in the optimal selection's prefix.
    pub q: u64,
    /// Number of feasible selections.
    pub n_feasible: u64,
    /// Smallest nonzero difference between distinct item values.
    pub d_min: f64,
    /// Smallest item value.
    pub v_min: f64,
    /// Initial distance to the optimum, Y₀.
    pub y0: f64,
    /// Largest consecutive gap in the target space.
    pub beta: f64,
}

/// Parameters of the MAX-SAT bounds (mutation probability ½).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaxSatBoundParams {
    /// Number of variables.
    pub n: u64,
    /// Offspring per generation.
    pub lambda: u64,
    /// Number of global optima.
    pub n_opt: u64,
    /// Clause count.
    pub s: u64,
    /// Largest consecutive gap in the target space.
    pub beta: f64,
}

/// Exact binomial coefficient C(n, k). Safe for n ≤ 64 without overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        // Exact at every step: the running product of i consecutive
        // binomial factors is divisible by i.
        result = result * (n - k + i) as u128 / i as u128;
    }
    result
}

/// n-th harmonic number H_n = Σ_{x=1..n} 1/x.
pub fn harmonic(n: u64) -> f64 {
    (1..=n).rev().map(|x| 1.0 / x as f64).sum()
}

/// General level-sum bound: k · Σ_i (r_i − r_{i−1}) / h(r_i), where h is a
/// monotonically non-decreasing lower bound on the expected k-generation
/// gain at fitness level r_i.
pub fn gap_sum_bound(
    levels: &TargetSpace,
    h: impl Fn(f64) -> f64,
    k: u64,
) -> Result<f64, BoundsError> {
    assert!(k >= 1, "the horizon k must be at least 1");
    let rs = levels.levels();
    let hs: Vec<f64> = rs.iter().map(|&r| h(r)).collect();
    for pair in hs.windows(2) {
        if !(pair[1] > 0.0) || pair[1] < pair[0] {
            return Err(BoundsError::InvalidGainBound);
        }
    }
    let sum: f64 = rs
        .windows(2)
        .zip(hs.iter().skip(1))
        .map(|(pair, &h_i)| (pair[1] - pair[0]) / h_i)
        .sum();
    Ok(k as f64 * sum)
}

/// Coarse bound k_low · y0 / alpha covering any elitist run that improves
/// by at least alpha every k_low generations in expectation.
pub fn worst_case_bound(k_low: f64, y0: f64, alpha: f64) -> Result<f64, BoundsError> {
    assert!(k_low > 0.0, "k_low must be strictly positive");
    assert!(y0 >= 0.0, "the initial distance cannot be negative");
    if !(alpha > 0.0) {
        return Err(BoundsError::InvalidAlpha(alpha));
    }
    Ok(k_low * y0 / alpha)
}

/// EFHT bound for the (1+1) EA on the bit-counting problem with mutation
/// probability 1/n: e·n·H_n.
pub fn onemax_efht1(n: u64) -> f64 {
    assert!(n >= 1);
    std::f64::consts::E * n as f64 * harmonic(n)
}

/// Stagnation quantity for the bit-counting problem: e·n.
pub fn onemax_klow(n: u64) -> f64 {
    assert!(n >= 1);
    std::f64::consts::E * n as f64
}

/// Per-event success chances and the combined denominator shared by all
/// knapsack bounds.
struct KnapsackDenominator {
    p_low1: f64,
    p_low2: f64,
    value: f64,
}

fn knapsack_denominator(p: &KnapsackBoundParams) -> Result<KnapsackDenominator, BoundsError> {
    if p.lambda < 1 {
        return Err(BoundsError::InvalidLambda);
    }
    if p.q < 1 || p.q > p.n {
        return Err(BoundsError::NumericalDomain("q must lie in 1..=n"));
    }
    if p.n_feasible < 1 {
        return Err(BoundsError::NumericalDomain("the feasible count must be at least 1"));
    }
    if !(p.d_min > 0.0) || !(p.v_min > 0.0) {
        return Err(BoundsError::NumericalDomain("d_min and v_min must be strictly positive"));
    }
    // Σ_{i=0}^{q−1} C(q, i), computed exactly before the final division.
    let prefix_patterns: u128 = (0..p.q).map(|i| binomial(p.q, i)).sum();
    let p_eps2 = prefix_patterns as f64 / p.n_feasible as f64;
    let p_eps1 = 1.0 - p_eps2;
    let n = p.n as f64;
    let lambda = p.lambda as f64;
    let p_low1 = 1.0 - (-lambda / (n * n * std::f64::consts::E)).exp();
    let p_low2 = 1.0 - (-lambda / (n * std::f64::consts::E)).exp();
    let value = p_eps1 * p.d_min * p_low1 + p_eps2 * p.v_min * p_low2;
    if !(value > 0.0) || !value.is_finite() {
        return Err(BoundsError::NumericalDomain("denominator must be positive and finite"));
    }
    Ok(KnapsackDenominator { p_low1, p_low2, value })
}

/// EFHT bound for the (1+λ) EA on favorably correlated knapsack instances.
pub fn knapsack_efht1(p: &KnapsackBoundParams) -> Result<f64, BoundsError> {
    if !(p.y0 >= 0.0) {
        return Err(BoundsError::NumericalDomain("y0 cannot be negative"));
    }
    Ok(p.y0 / knapsack_denominator(p)?.value)
}

/// Stagnation quantity for the knapsack bounds: beta over the same
/// denominator as [`knapsack_efht1`].
pub fn knapsack_klow(p: &KnapsackBoundParams) -> Result<f64, BoundsError> {
    if !(p.beta > 0.0) {
        return Err(BoundsError::InvalidBeta(p.beta));
    }
    Ok(p.beta / knapsack_denominator(p)?.value)
}

/// Which single term of the knapsack denominator dominates when the other
/// is dropped to loosen the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnapsackRegime {
    /// d_min·p_low1 ≥ v_min·p_low2: keep the v_min term.
    VminDominant,
    /// Otherwise: keep the d_min term.
    DminDominant,
}

/// Single-term relaxation of [`knapsack_efht1`]: drops the smaller of the
/// two denominator terms, so the result always dominates the full bound.
pub fn knapsack_regime(p: &KnapsackBoundParams) -> Result<(KnapsackRegime, f64), BoundsError> {
    if !(p.y0 >= 0.0) {
        return Err(BoundsError::NumericalDomain("y0 cannot be negative"));
    }
    let d = knapsack_denominator(p)?;
    // Dominance: the full denominator is a convex combination of the two
    // products, so dividing by the smaller product alone loosens the bound.
    if p.d_min * d.p_low1 - p.v_min * d.p_low2 >= 0.0 {
        Ok((KnapsackRegime::VminDominant, p.y0 / (p.v_min * d.p_low2)))
    } else {
        Ok((KnapsackRegime::DminDominant, p.y0 / (p.d_min * d.p_low1)))
    }
}

fn maxsat_denominator(p: &MaxSatBoundParams) -> Result<f64, BoundsError> {
    if p.lambda < 1 {
        return Err(BoundsError::InvalidLambda);
    }
    if p.n_opt < 1 || p.s < 1 {
        return Err(BoundsError::NumericalDomain("n_opt and s must be at least 1"));
    }
    let rate = p.lambda as f64 * p.n_opt as f64 / (p.n as f64).exp2();
    let value = (1.0 - (-rate).exp()) * p.n_opt as f64;
    if !(value > 0.0) || !value.is_finite() {
        return Err(BoundsError::NumericalDomain("denominator must be positive and finite"));
    }
    Ok(value)
}

/// EFHT bound for the (1+λ) EA with mutation probability ½ on CNF
/// formulas: H_s over the optimum-jump denominator.
pub fn maxsat_efht1(p: &MaxSatBoundParams) -> Result<f64, BoundsError> {
    Ok(harmonic(p.s) / maxsat_denominator(p)?)
}

/// Stagnation quantity for the CNF bounds: beta over the same denominator
/// as [`maxsat_efht1`].
pub fn maxsat_klow(p: &MaxSatBoundParams) -> Result<f64, BoundsError> {
    if !(p.beta > 0.0) {
        return Err(BoundsError::InvalidBeta(p.beta));
    }
    Ok(p.beta / maxsat_denominator(p)?)
}

/// Smallest positive integer not below `k_low`, for consumers that need a
/// whole number of generations.
pub fn klow_ceil(k_low: f64) -> u64 {
    assert!(k_low.is_finite() && k_low >= 0.0);
    (k_low.ceil() as u64).max(1)
}
