//! Cross-layer validation: the exact chain oracles, the simulators, and the
//! experiment harness must all agree on small instances.
//!
//! The first test rebuilds the (1+1) EA on the bit-counting problem as a
//! full-genotype Markov chain (every state, no level lumping) and solves it
//! by Gaussian elimination — an independent derivation of the same quantity
//! the level-based oracle computes. The remaining tests compare Monte-Carlo
//! estimates from the actual simulators against the exact oracle values.

use efht_core::algorithms::EaConfig;
use efht_core::core_types::{derive_stream, BitString};
use efht_core::experiments::{configure_cell, run_experiment, ExperimentFamily, ExperimentSpec};
use efht_core::instrumentation::{empirical_multiple_gain, first_hitting_time};
use efht_core::oracle::{
    knapsack_exact_efht, maxsat_c_exact_efht, maxsat_c_level_counts, onemax_exact_efht,
    onemax_exact_gain,
};
use efht_core::problems::{
    make_knapsack_b, make_maxsat_c, maxsat_evaluate, MinimizedView, OneMaxProblem, Problem,
};

/// Solves (I − Q)·E = 1 for the expected absorption times of a finite
/// absorbing chain given its full one-step matrix, by Gaussian elimination
/// with partial pivoting.
fn expected_absorption_dense(p: &[Vec<f64>], absorbing: usize) -> Vec<f64> {
    let states = p.len();
    let transient: Vec<usize> = (0..states).filter(|&s| s != absorbing).collect();
    let m = transient.len();
    let mut a = vec![vec![0.0f64; m + 1]; m];
    for (row, &s) in transient.iter().enumerate() {
        for (col, &t) in transient.iter().enumerate() {
            a[row][col] = if row == col { 1.0 - p[s][t] } else { -p[s][t] };
        }
        a[row][m] = 1.0;
    }
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, pivot);
        assert!(a[col][col].abs() > 1e-12, "chain matrix must be non-singular");
        for row in col + 1..m {
            let factor = a[row][col] / a[col][col];
            for k in col..=m {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    let mut e = vec![0.0f64; m];
    for row in (0..m).rev() {
        let mut acc = a[row][m];
        for col in row + 1..m {
            acc -= a[row][col] * e[col];
        }
        e[row] = acc / a[row][row];
    }
    let mut full = vec![0.0f64; states];
    for (row, &s) in transient.iter().enumerate() {
        full[s] = e[row];
    }
    full
}

#[test]
fn full_genotype_chain_agrees_with_level_oracle() {
    let n = 8usize;
    let p_flip = 1.0 / n as f64;
    let states = 1usize << n;
    let optimum = states - 1;
    let mut p = vec![vec![0.0f64; states]; states];
    for x in 0..states {
        if x == optimum {
            p[x][x] = 1.0;
            continue;
        }
        let ones_x = (x as u64).count_ones();
        let mut moved = 0.0;
        for y in 0..states {
            if y == x {
                continue;
            }
            let d = (x ^ y).count_ones() as i32;
            if (y as u64).count_ones() >= ones_x {
                let prob = p_flip.powi(d) * (1.0 - p_flip).powi(n as i32 - d);
                p[x][y] = prob;
                moved += prob;
            }
        }
        p[x][x] = 1.0 - moved;
    }
    let e = expected_absorption_dense(&p, optimum);
    let exact = onemax_exact_efht(n as u64).unwrap();
    assert!(
        (e[0] - exact).abs() <= 1e-9 * exact,
        "dense chain gave {}, level oracle gave {exact}",
        e[0]
    );
}

#[test]
fn cnf_level_census_matches_direct_enumeration() {
    let n = 10usize;
    let formula = make_maxsat_c(n).unwrap();
    let mut census = std::collections::BTreeMap::new();
    for mask in 0..(1u64 << n) {
        let x = BitString::from_mask(mask, n);
        let fitness = maxsat_evaluate(&formula, &x).unwrap();
        *census.entry(fitness).or_insert(0u64) += 1;
    }
    let expected: Vec<(u64, u64)> = census.into_iter().collect();
    let counts = maxsat_c_level_counts(n as u64).unwrap();
    assert_eq!(counts, expected);
}

#[test]
fn empirical_gain_matches_exact_gain() {
    let n = 8u64;
    let r = 3u64;
    let exact = onemax_exact_gain(n, r).unwrap();
    let view = MinimizedView::new(Problem::OneMax(OneMaxProblem::new(n as usize))).unwrap();
    let cfg = EaConfig::one_plus_one(1.0 / n as f64).with_max_generations(10);
    // Any point at distance r works; symmetry makes the choice irrelevant.
    let x = BitString::from_mask((1u64 << (n - r)) - 1, n as usize);
    let mut rng = derive_stream(0x9a1e, 0);
    let estimate = empirical_multiple_gain(&view, &cfg, &x, 1, 300_000, &mut rng).unwrap();
    assert!(estimate.stderr < 2e-3);
    assert!(
        (estimate.mean - exact).abs() <= 5.0 * estimate.stderr,
        "empirical gain {} ± {} vs exact {exact}",
        estimate.mean,
        estimate.stderr
    );
}

fn monte_carlo_mean_t0(
    family: ExperimentFamily,
    n: usize,
    lambda: u64,
    runs: u64,
    master_seed: u64,
) -> f64 {
    let cell = configure_cell(family, n, lambda, 10_000_000).unwrap();
    let mut total = 0u64;
    for run in 0..runs {
        let mut rng = derive_stream(master_seed, run);
        let trace = cell.run(&mut rng).unwrap();
        total += first_hitting_time(&trace, 0.0).unwrap();
    }
    total as f64 / runs as f64
}

#[test]
fn simulated_bit_counting_matches_exact_chain() {
    let exact = onemax_exact_efht(8).unwrap();
    let mean = monte_carlo_mean_t0(ExperimentFamily::OneMax, 8, 1, 20_000, 0xA001);
    assert!(
        (mean - exact).abs() <= 0.02 * exact,
        "Monte-Carlo mean {mean} vs exact {exact}"
    );
}

#[test]
fn simulated_knapsack_matches_exact_chain() {
    let inst = make_knapsack_b(5).unwrap();
    let exact = knapsack_exact_efht(&inst, 1, &BitString::zeros(5)).unwrap();
    let mean = monte_carlo_mean_t0(ExperimentFamily::Knapsack, 5, 1, 20_000, 0xB001);
    assert!(
        (mean - exact).abs() <= 0.03 * exact,
        "Monte-Carlo mean {mean} vs exact {exact}"
    );
}

#[test]
fn simulated_cnf_matches_exact_chain() {
    let exact = maxsat_c_exact_efht(5, 20).unwrap();
    let mean = monte_carlo_mean_t0(ExperimentFamily::MaxSat, 5, 20, 20_000, 0xC001);
    assert!(
        (mean - exact).abs() <= 0.03 * exact,
        "Monte-Carlo mean {mean} vs exact {exact}"
    );
}

#[test]
fn harness_aggregate_matches_exact_chain() {
    let spec = ExperimentSpec {
        family: ExperimentFamily::OneMax,
        n_grid: vec![8],
        runs: 10_000,
        lambda: 1,
        master_seed: 0xAB01,
        max_generations: 10_000_000,
    };
    let report = run_experiment(&spec).unwrap();
    let exact = onemax_exact_efht(8).unwrap();
    let row = &report.rows[0];
    assert!(
        (row.t0_mean - exact).abs() <= 0.03 * exact,
        "harness mean {} vs exact {exact}",
        row.t0_mean
    );
    assert!(row.efht1 > row.t0_mean);
    assert!(row.t0_mean <= row.t0_max as f64);
    assert_eq!(row.y0, 8.0);
}
