use crate::core_types::BitString;

use super::ProblemError;

/// A 0-1 knapsack instance: pick a subset of items maximizing total value
/// subject to the total weight staying within the capacity.
#[derive(Clone, Debug, PartialEq)]
pub struct KnapsackInstance {
    values: Vec<f64>,
    weights: Vec<f64>,
    capacity: f64,
}

/// Result of evaluating one assignment against a [`KnapsackInstance`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KnapsackEvaluation {
    pub value: f64,
    pub weight: f64,
    pub feasible: bool,
}

impl KnapsackInstance {
    pub fn new(values: Vec<f64>, weights: Vec<f64>, capacity: f64) -> Self {
        assert_eq!(values.len(), weights.len(), "values and weights must have equal length");
        assert!(!values.is_empty(), "an instance needs at least one item");
        assert!(values.iter().all(|&v| v > 0.0), "item values must be positive");
        assert!(weights.iter().all(|&w| w > 0.0), "item weights must be positive");
        assert!(capacity > 0.0, "capacity must be positive");
        KnapsackInstance { values, weights, capacity }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn capacity(&self) -> f64 {
        self.capacity
    }
}

/// Total value, total weight, and feasibility of the selection `x`.
/// Infeasible selections are evaluated, not rejected; constraint handling
/// is the search algorithm's job.
pub fn knapsack_evaluate(
    inst: &KnapsackInstance,
    x: &BitString,
) -> Result<KnapsackEvaluation, ProblemError> {
    if x.len() != inst.n() {
        return Err(ProblemError::DimensionMismatch { expected: inst.n(), got: x.len() });
    }
    let mut value = 0.0;
    let mut weight = 0.0;
    for (i, bit) in x.iter().enumerate() {
        if bit {
            value += inst.values[i];
            weight += inst.weights[i];
        }
    }
    Ok(KnapsackEvaluation { value, weight, feasible: weight <= inst.capacity })
}

/// Benchmark family used by the knapsack experiment: values
/// (3, 3, 1, 1, …, 1), weights (1, 1, 1, 2, …, 2), capacity 3. The first
/// three items are light and valuable, the rest heavy fillers; the optimum
/// packs exactly items 1-3 for value 7.
pub fn make_knapsack_b(n: usize) -> Result<KnapsackInstance, ProblemError> {
    if n < 5 {
        return Err(ProblemError::InstanceTooSmall { min: 5, got: n });
    }
    let mut values = vec![3.0, 3.0];
    values.resize(n, 1.0);
    let mut weights = vec![1.0, 1.0, 1.0];
    weights.resize(n, 2.0);
    Ok(KnapsackInstance::new(values, weights, 3.0))
}

/// True iff item values are non-increasing and weights non-decreasing in
/// index order, i.e. earlier items are always at least as attractive.
pub fn validate_favorably_correlated(inst: &KnapsackInstance) -> bool {
    inst.values.windows(2).all(|w| w[0] >= w[1])
        && inst.weights.windows(2).all(|w| w[0] <= w[1])
}
