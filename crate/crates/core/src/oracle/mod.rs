//! Exact small-instance references: absorbing Markov chains whose expected
//! absorption times pin down the true EFHT of the two EAs on each problem
//! family. Everything here is brute force by construction and exists to
//! validate the stochastic layers and the closed-form bounds.

mod knapsack;
mod maxsat;
mod onemax;

pub use knapsack::knapsack_exact_efht;
pub use maxsat::{maxsat_c_exact_efht, maxsat_c_level_chain, maxsat_c_level_counts};
pub use onemax::{onemax_exact_efht, onemax_exact_gain, onemax_level_chain};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("parameters outside the oracle's exact range: {0}")]
    OutOfRange(&'static str),
    #[error("initial individual violates the problem constraints")]
    InfeasibleStart,
}

/// Tolerance on row-stochasticity of chain rows.
pub const ROW_SUM_TOLERANCE: f64 = 1e-12;

/// An absorbing fitness-level chain: states are fitness levels in strictly
/// increasing order, transitions never decrease fitness, and the top level
/// is absorbing.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelChain {
    levels: Vec<f64>,
    transition: Vec<Vec<f64>>,
}

impl LevelChain {
    /// Validates and wraps a transition matrix. Panics on malformed input:
    /// chains are built internally, so a violation is a construction bug,
    /// not a runtime condition.
    pub fn new(levels: Vec<f64>, transition: Vec<Vec<f64>>) -> Self {
        assert!(levels.len() >= 2, "a chain needs at least two levels");
        assert!(
            levels.windows(2).all(|w| w[0] < w[1]),
            "levels must be strictly increasing"
        );
        assert_eq!(levels.len(), transition.len(), "one row per level");
        for (i, row) in transition.iter().enumerate() {
            assert_eq!(row.len(), levels.len(), "square transition matrix");
            let sum: f64 = row.iter().sum();
            assert!(
                (sum - 1.0).abs() <= ROW_SUM_TOLERANCE,
                "row {i} sums to {sum}, not 1"
            );
            assert!(
                row.iter().take(i).all(|&p| p == 0.0),
                "row {i} transitions to a lower fitness level"
            );
        }
        let last = transition.len() - 1;
        assert!(
            (transition[last][last] - 1.0).abs() <= ROW_SUM_TOLERANCE,
            "the top level must be absorbing"
        );
        LevelChain { levels, transition }
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn transition(&self) -> &[Vec<f64>] {
        &self.transition
    }

    /// Index of the absorbing optimum level.
    pub fn absorbing_index(&self) -> usize {
        self.levels.len() - 1
    }

    /// Expected number of steps to reach the absorbing level from
    /// `start`. Because transitions never decrease fitness, a single
    /// backward sweep suffices:
    /// E_i = (1 + Σ_{j>i} P(i→j)·E_j) / (1 − P(i→i)).
    pub fn expected_absorption(&self, start: usize) -> f64 {
        assert!(start < self.levels.len(), "start level out of range");
        let m = self.levels.len();
        let mut expected = vec![0.0; m];
        for i in (0..m - 1).rev() {
            let row = &self.transition[i];
            let stay = row[i];
            assert!(
                stay < 1.0,
                "level {i} has no escape probability; absorption time diverges"
            );
            let moved: f64 = (i + 1..m).map(|j| row[j] * expected[j]).sum();
            expected[i] = (1.0 + moved) / (1.0 - stay);
        }
        expected[start]
    }
}
