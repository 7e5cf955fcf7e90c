//! Exact fitness-level chain of the (1+1) EA (accept-on-equal, mutation
//! probability 1/n) on the bit-counting problem. With r zero-bits, flipping
//! a zeros and b ones has probability C(r,a)·C(n−r,b)·(n−1)^(n−a−b) / nⁿ,
//! and the mutant is accepted exactly when a ≥ b. All weights are exact
//! u128 integers over the common denominator nⁿ; division happens once at
//! the end. n ≤ 20 keeps every intermediate within u128.

use super::{LevelChain, OracleError};
use crate::bounds::binomial;

const MAX_N: u64 = 20;

/// Exact per-level transition weights (numerators over nⁿ) from the state
/// with `r` zero-bits to states with `r'` zero-bits. Rejected mutants stay.
fn level_weights(n: u64, r: u64) -> Vec<u128> {
    let mut weights = vec![0u128; (r + 1) as usize];
    for a in 0..=r {
        for b in 0..=(n - r) {
            let w = binomial(r, a)
                * binomial(n - r, b)
                * ((n - 1) as u128).pow((n - a - b) as u32);
            if a >= b {
                weights[(r - (a - b)) as usize] += w;
            } else {
                weights[r as usize] += w;
            }
        }
    }
    weights
}

/// Exact expected one-generation gain E[Y_t − Y_{t+1} | Y_t = r] of the
/// (1+1) EA at a state with `r` zero-bits.
pub fn onemax_exact_gain(n: u64, r: u64) -> Result<f64, OracleError> {
    if n < 1 || n > MAX_N || r < 1 || r > n {
        return Err(OracleError::OutOfRange("onemax gain requires 1 <= r <= n <= 20"));
    }
    let weights = level_weights(n, r);
    let denominator = (n as u128).pow(n as u32);
    let weighted: u128 = weights
        .iter()
        .enumerate()
        .map(|(r2, &w)| w * (r - r2 as u64) as u128)
        .sum();
    Ok(weighted as f64 / denominator as f64)
}

/// Builds the exact fitness-level chain (levels indexed by one-bit count).
pub fn onemax_level_chain(n: u64) -> Result<LevelChain, OracleError> {
    if n < 1 || n > MAX_N {
        return Err(OracleError::OutOfRange("onemax chain requires 1 <= n <= 20"));
    }
    let denominator = (n as u128).pow(n as u32) as f64;
    let m = (n + 1) as usize;
    let mut transition = vec![vec![0.0; m]; m];
    for ones in 0..n {
        let r = n - ones; // zero-bits at this level
        for (r2, &w) in level_weights(n, r).iter().enumerate() {
            transition[ones as usize][(n - r2 as u64) as usize] = w as f64 / denominator;
        }
    }
    transition[n as usize][n as usize] = 1.0;
    let levels = (0..=n).map(|f| f as f64).collect();
    Ok(LevelChain::new(levels, transition))
}

/// Exact EFHT of the (1+1) EA on the bit-counting problem from the
/// all-zeros start.
pub fn onemax_exact_efht(n: u64) -> Result<f64, OracleError> {
    Ok(onemax_level_chain(n)?.expected_absorption(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::onemax_efht1;

    fn close(a: f64, b: f64, rel: f64) {
        assert!((a - b).abs() <= rel * b.abs().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn single_bit_is_deterministic() {
        // p = 1/n = 1 flips the lone bit every generation.
        assert_eq!(onemax_exact_efht(1), Ok(1.0));
    }

    #[test]
    fn two_bits_in_closed_form() {
        // From 00 (p = 1/2): each of the four mutants is equally likely
        // and all are accepted; standard absorption algebra gives 4.
        assert_eq!(onemax_exact_efht(2), Ok(4.0));
    }

    #[test]
    fn regression_values() {
        close(onemax_exact_efht(8).unwrap(), 40.61873778250405, 1e-12);
        close(onemax_exact_efht(10).unwrap(), 56.143435296506745, 1e-12);
        close(onemax_exact_efht(14).unwrap(), 90.19529507677694, 1e-12);
    }

    #[test]
    fn exact_gain_examples() {
        assert_eq!(onemax_exact_gain(2, 2), Ok(1.0));
        close(onemax_exact_gain(8, 3).unwrap(), 0.2090030312538147, 1e-13);
        close(onemax_exact_gain(12, 5).unwrap(), 0.24922284981666448, 1e-13);
        assert!(onemax_exact_gain(2, 0).is_err());
        assert!(onemax_exact_gain(21, 1).is_err());
    }

    #[test]
    fn exact_gain_dominates_linear_lower_bound() {
        for n in 1..=12u64 {
            let en = std::f64::consts::E * n as f64;
            for r in 1..=n {
                let gain = onemax_exact_gain(n, r).unwrap();
                assert!(gain >= r as f64 / en, "n={n} r={r}: {gain}");
            }
        }
    }

    #[test]
    fn chain_is_dominated_by_the_closed_form_bound() {
        for n in 5..=14u64 {
            assert!(onemax_exact_efht(n).unwrap() < onemax_efht1(n));
        }
    }
}
