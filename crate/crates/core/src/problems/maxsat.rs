use crate::core_types::BitString;

use super::ProblemError;

/// One literal of a CNF clause: a 1-based variable index, possibly negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn positive(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn negative(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// Whether the assignment `x` (bit i-1 gives the truth value of
    /// variable i) satisfies this literal.
    pub fn satisfied_by(&self, x: &BitString) -> bool {
        x.get(self.var - 1) != self.negated
    }
}

/// A propositional formula in conjunctive normal form, scored by the
/// number of satisfied clauses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Builds a formula, checking that every clause is non-empty and that
    /// every variable index lies in `1..=num_vars`.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, ProblemError> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(ProblemError::EmptyClause);
            }
            for lit in clause {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(ProblemError::VariableOutOfRange {
                        var: lit.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Clause count, usually written `s`.
    pub fn s(&self) -> usize {
        self.clauses.len()
    }
}

/// Number of clauses of `f` with at least one satisfied literal.
pub fn maxsat_evaluate(f: &CnfFormula, x: &BitString) -> Result<u64, ProblemError> {
    if x.len() != f.num_vars {
        return Err(ProblemError::DimensionMismatch { expected: f.num_vars, got: x.len() });
    }
    Ok(f.clauses
        .iter()
        .filter(|clause| clause.iter().any(|lit| lit.satisfied_by(x)))
        .count() as u64)
}

/// Benchmark family used by the satisfiability experiment: the 2(n−1)
/// two-literal clauses (x₁ ∨ ¬x_j) and (¬x₁ ∨ x_j) for j = 2..n. Each
/// clause pair forces x_j to agree with x₁, so the fitness of any
/// assignment is (n−1) plus the number of positions 2..n agreeing with
/// bit 1, and the global optima are all-zeros and all-ones.
pub fn make_maxsat_c(n: usize) -> Result<CnfFormula, ProblemError> {
    if n < 2 {
        return Err(ProblemError::InstanceTooSmall { min: 2, got: n });
    }
    let mut clauses = Vec::with_capacity(2 * (n - 1));
    for j in 2..=n {
        clauses.push(vec![Literal::positive(1), Literal::negative(j)]);
    }
    for j in 2..=n {
        clauses.push(vec![Literal::negative(1), Literal::positive(j)]);
    }
    CnfFormula::new(n, clauses)
}
