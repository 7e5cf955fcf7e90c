//! Exact full-genotype chain of the (1+λ) EA on small knapsack instances.
//!
//! Unlike the level chains, acceptance here compares fitness while the
//! state is a genotype, so the chain runs over all 2ⁿ assignments. Per
//! offspring, a mutant g is drawn from the parent s with probability
//! (1/n)^d·(1−1/n)^(n−d) for Hamming distance d; infeasible mutants are
//! remapped to the parent. The generation's successor is the first
//! offspring attaining the maximum value M, accepted only when M strictly
//! beats the parent. Conditioning on M and applying the first-success
//! decomposition over the λ i.i.d. offspring gives the exact successor
//! distribution:
//!   P(successor = g, val g = m) = D(g) · Σ_{i=1..λ} P(<m)^(i−1)·P(≤m)^(λ−i)
//! where D is the per-offspring effective distribution.

use std::collections::BTreeMap;

use super::OracleError;
use crate::core_types::BitString;
use crate::problems::{knapsack_evaluate, KnapsackInstance};

const MAX_N: usize = 8;

/// Exact EFHT of the (1+λ) EA (mutation probability 1/n, strict best-of-λ
/// acceptance, infeasible offspring standing in for the parent) on `inst`,
/// started from `x0`.
pub fn knapsack_exact_efht(
    inst: &KnapsackInstance,
    lambda: u64,
    x0: &BitString,
) -> Result<f64, OracleError> {
    let n = inst.n();
    if n > MAX_N {
        return Err(OracleError::OutOfRange("exact knapsack chain requires n <= 8"));
    }
    if lambda < 1 {
        return Err(OracleError::OutOfRange("lambda must be at least 1"));
    }
    assert_eq!(x0.len(), n, "start point must match the instance length");

    let size = 1usize << n;
    let mut value = vec![0.0f64; size];
    let mut feasible = vec![false; size];
    for g in 0..size {
        let eval = knapsack_evaluate(inst, &BitString::from_mask(g as u64, n))
            .expect("lengths match by construction");
        value[g] = eval.value;
        feasible[g] = eval.feasible;
    }
    let x0_mask = (0..n).filter(|&i| x0.get(i)).fold(0usize, |m, i| m | (1 << i));
    if !feasible[x0_mask] {
        return Err(OracleError::InfeasibleStart);
    }

    let optimum = value
        .iter()
        .zip(&feasible)
        .filter(|&(_, &f)| f)
        .map(|(&v, _)| v)
        .fold(f64::NEG_INFINITY, f64::max);

    // Hamming-distance mutation weights for p = 1/n.
    let p = 1.0 / n as f64;
    let distance_weight: Vec<f64> =
        (0..=n).map(|d| p.powi(d as i32) * (1.0 - p).powi((n - d) as i32)).collect();

    // Feasible states in descending value order; strictly better states are
    // solved before anything that can reach them.
    let mut states: Vec<usize> = (0..size).filter(|&g| feasible[g]).collect();
    states.sort_by(|&a, &b| value[b].partial_cmp(&value[a]).expect("finite values"));

    let mut expected = vec![0.0f64; size];
    for &s in &states {
        if value[s] == optimum {
            continue; // absorbing: expected[s] stays 0
        }
        // Effective per-offspring distribution: infeasible mass returns
        // to the parent.
        let mut offspring = vec![0.0f64; size];
        for g in 0..size {
            let d = (s ^ g).count_ones() as usize;
            let q = distance_weight[d];
            if feasible[g] {
                offspring[g] += q;
            } else {
                offspring[s] += q;
            }
        }
        // Group reachable feasible genotypes by exact value.
        let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for g in 0..size {
            if feasible[g] && offspring[g] > 0.0 {
                classes.entry(value[g].to_bits()).or_default().push(g);
            }
        }
        let mut below = 0.0f64; // P(one offspring lands strictly under the class)
        let mut move_prob = 0.0f64;
        let mut move_term = 0.0f64;
        for (value_bits, members) in &classes {
            let class_value = f64::from_bits(*value_bits);
            let class_mass: f64 = members.iter().map(|&g| offspring[g]).sum();
            let at_or_below = below + class_mass;
            if class_value > value[s] {
                // Σ_{i=1..λ} below^(i−1) · at_or_below^(λ−i), the
                // first-success weight of this value class.
                let first_success = if at_or_below > below {
                    (at_or_below.powi(lambda as i32) - below.powi(lambda as i32))
                        / (at_or_below - below)
                } else {
                    lambda as f64 * below.powi(lambda as i32 - 1)
                };
                for &g in members {
                    let transition = offspring[g] * first_success;
                    move_prob += transition;
                    move_term += transition * expected[g];
                }
            }
            below = at_or_below;
        }
        assert!(
            move_prob > 0.0,
            "non-optimal feasible state has no improving transition"
        );
        expected[s] = (1.0 + move_term) / move_prob;
    }
    Ok(expected[x0_mask])
}
