//! Exact fitness-level chain of the (1+λ) EA, mutation probability ½, on
//! the agreement-forcing CNF family. At mutation probability ½ every
//! offspring is uniform on {0,1}ⁿ, so per-offspring fitness follows the
//! instance's level counts and the best-of-λ maximum has a closed form.

use super::{LevelChain, OracleError};
use crate::bounds::binomial;
use crate::core_types::BitString;
use crate::problems::{make_maxsat_c, maxsat_evaluate};

/// Exact census of the agreement-forcing family: fitness (n−1)+j is
/// achieved by exactly 2·C(n−1, j) assignments (j positions among 2..n
/// agreeing with bit 1, times two choices of bit 1). For n ≤ 15 the closed
/// form is re-verified against exhaustive enumeration before being
/// returned.
pub fn maxsat_c_level_counts(n: u64) -> Result<Vec<(u64, u64)>, OracleError> {
    if !(2..=30).contains(&n) {
        return Err(OracleError::OutOfRange("level counts require 2 <= n <= 30"));
    }
    let counts: Vec<(u64, u64)> =
        (0..n).map(|j| ((n - 1) + j, 2 * binomial(n - 1, j) as u64)).collect();
    if n <= 15 {
        let formula = make_maxsat_c(n as usize).expect("n >= 2");
        let mut census = vec![0u64; (2 * (n - 1) + 1) as usize];
        for mask in 0..(1u64 << n) {
            let fitness = maxsat_evaluate(&formula, &BitString::from_mask(mask, n as usize))
                .expect("matching lengths");
            census[fitness as usize] += 1;
        }
        for &(fitness, count) in &counts {
            assert_eq!(
                census[fitness as usize], count,
                "closed-form census disagrees with enumeration at fitness {fitness}"
            );
        }
    }
    Ok(counts)
}

/// Builds the exact best-of-λ fitness-level chain for the
/// agreement-forcing family at mutation probability ½.
pub fn maxsat_c_level_chain(n: u64, lambda: u64) -> Result<LevelChain, OracleError> {
    if !(2..=25).contains(&n) {
        return Err(OracleError::OutOfRange("exact chain requires 2 <= n <= 25"));
    }
    if lambda < 1 {
        return Err(OracleError::OutOfRange("lambda must be at least 1"));
    }
    let counts = maxsat_c_level_counts(n)?;
    let total = 2f64.powi(n as i32);
    // cumulative[w] = P(one offspring lands at level index <= w)
    let mut cumulative = Vec::with_capacity(counts.len());
    let mut acc = 0u64;
    for &(_, count) in &counts {
        acc += count;
        cumulative.push(acc as f64 / total);
    }

    let m = counts.len();
    let mut transition = vec![vec![0.0; m]; m];
    for v in 0..m - 1 {
        let mut stay = 1.0;
        for (w, row_entry) in transition[v].iter_mut().enumerate().skip(v + 1) {
            // P(max of λ uniform offspring sits exactly at level w)
            let below = if w == 0 { 0.0 } else { cumulative[w - 1] };
            let p = cumulative[w].powi(lambda as i32) - below.powi(lambda as i32);
            *row_entry = p;
            stay -= p;
        }
        transition[v][v] = stay;
    }
    transition[m - 1][m - 1] = 1.0;
    let levels = counts.iter().map(|&(fitness, _)| fitness as f64).collect();
    Ok(LevelChain::new(levels, transition))
}

/// Exact EFHT of the (1+λ) EA (mutation probability ½) on the
/// agreement-forcing family, from the canonical start one disagreement
/// below the optimum (fitness n−1, the lowest level).
pub fn maxsat_c_exact_efht(n: u64, lambda: u64) -> Result<f64, OracleError> {
    Ok(maxsat_c_level_chain(n, lambda)?.expected_absorption(0))
}
