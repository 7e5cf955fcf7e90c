use crate::core_types::BitString;

use super::ProblemError;

/// Count-the-one-bits benchmark on length-`n` bit strings. The fitness of
/// `x` is the number of ones, every string is feasible, and the unique
/// optimum is the all-ones string with fitness `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneMaxProblem {
    n: usize,
}

impl OneMaxProblem {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "encoding length must be at least 1");
        OneMaxProblem { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Number of one-bits in `x`.
pub fn onemax_evaluate(p: &OneMaxProblem, x: &BitString) -> Result<u64, ProblemError> {
    if x.len() != p.n {
        return Err(ProblemError::DimensionMismatch { expected: p.n, got: x.len() });
    }
    Ok(x.count_ones())
}
