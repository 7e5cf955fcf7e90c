use super::maxsat::{CnfFormula, Literal};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("missing, duplicate, or malformed \"p cnf <vars> <clauses>\" header")]
    MalformedHeader,
    #[error("literal references variable {var}, but the header declares {num_vars} variables")]
    VariableOutOfRange { var: i64, num_vars: usize },
    #[error("header declares {declared} clauses but {found} were found")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("clause with no literals")]
    EmptyClause,
    #[error("unexpected token {0:?} in clause data")]
    InvalidToken(String),
}

/// Parses DIMACS CNF text: `c`-prefixed comment lines, a single
/// `p cnf <vars> <clauses>` header, then whitespace-separated signed
/// integers where each clause ends with a lone `0`. A positive integer is
/// a positive literal, a negative one a negated literal.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();

    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::MalformedHeader);
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(DimacsError::MalformedHeader);
            }
            let num_vars = fields[2].parse().map_err(|_| DimacsError::MalformedHeader)?;
            let num_clauses = fields[3].parse().map_err(|_| DimacsError::MalformedHeader)?;
            header = Some((num_vars, num_clauses));
            continue;
        }
        let (num_vars, _) = header.ok_or(DimacsError::MalformedHeader)?;
        for token in trimmed.split_whitespace() {
            let lit: i64 =
                token.parse().map_err(|_| DimacsError::InvalidToken(token.to_string()))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(DimacsError::EmptyClause);
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                let var = lit.unsigned_abs() as usize;
                if var > num_vars {
                    return Err(DimacsError::VariableOutOfRange { var: lit, num_vars });
                }
                current.push(Literal { var, negated: lit < 0 });
            }
        }
    }

    let (num_vars, declared) = header.ok_or(DimacsError::MalformedHeader)?;
    // Tolerate a final clause whose terminating 0 was dropped at EOF.
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != declared {
        return Err(DimacsError::ClauseCountMismatch { declared, found: clauses.len() });
    }
    Ok(CnfFormula::new(num_vars, clauses).expect("parser enforces the structural invariants"))
}

/// Writes a formula back out in the same format accepted by
/// [`parse_dimacs`], one clause per line.
pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.s());
    for clause in f.clauses() {
        for lit in clause {
            let signed = if lit.negated { -(lit.var as i64) } else { lit.var as i64 };
            out.push_str(&signed.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

/// Advisory check that every clause has exactly `k` literals. Kept apart
/// from the parser because general CNF is accepted everywhere else.
pub fn is_k_uniform(f: &CnfFormula, k: usize) -> bool {
    f.clauses().iter().all(|clause| clause.len() == k)
}
