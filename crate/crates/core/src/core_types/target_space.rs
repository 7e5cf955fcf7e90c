/// The sorted set of achievable fitness values S = {r₀ < r₁ < … < r_m},
/// together with the extreme consecutive gaps: `alpha` is the smallest gap
/// and `beta` the largest. Both are strictly positive.
#[derive(Clone, Debug, PartialEq)]
pub struct TargetSpace {
    levels: Vec<f64>,
    alpha: f64,
    beta: f64,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum TargetSpaceError {
    #[error("a target space needs at least two strictly increasing levels")]
    InvalidTargetSpace,
}

/// Computes gap statistics for a strictly increasing level sequence.
pub fn target_space_stats(levels: &[f64]) -> Result<TargetSpace, TargetSpaceError> {
    if levels.len() < 2 {
        return Err(TargetSpaceError::InvalidTargetSpace);
    }
    let mut alpha = f64::INFINITY;
    let mut beta = 0.0f64;
    for w in levels.windows(2) {
        let gap = w[1] - w[0];
        if !(gap > 0.0) {
            return Err(TargetSpaceError::InvalidTargetSpace);
        }
        alpha = alpha.min(gap);
        beta = beta.max(gap);
    }
    Ok(TargetSpace { levels: levels.to_vec(), alpha, beta })
}

impl TargetSpace {
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Smallest consecutive gap.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Largest consecutive gap.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Lowest level r₀.
    pub fn min_level(&self) -> f64 {
        self.levels[0]
    }

    /// Highest level r_m (the optimum fitness for maximization problems).
    pub fn max_level(&self) -> f64 {
        *self.levels.last().expect("levels are non-empty")
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least two levels
    }

    pub fn contains(&self, value: f64) -> bool {
        self.levels.iter().any(|&l| l == value)
    }
}
