//! DIMACS-style 2-CNF text input: `p cnf <vars> <clauses>` header, two
//! literals per clause line, optional trailing 0, `c` comment lines.

use crate::error::{Error, Result};
use crate::reductions::{Cnf2, Lit};

pub fn parse_dimacs_cnf2(text: &str) -> Result<Cnf2> {
    let mut num_vars: Option<usize> = None;
    let mut declared_clauses = 0usize;
    let mut clauses: Vec<(Lit, Lit)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(Error::invalid(format!(
                    "line {}: header must be 'p cnf <vars> <clauses>'",
                    lineno + 1
                )));
            }
            num_vars = Some(fields[1].parse().map_err(|_| {
                Error::invalid(format!("line {}: bad variable count", lineno + 1))
            })?);
            declared_clauses = fields[2].parse().map_err(|_| {
                Error::invalid(format!("line {}: bad clause count", lineno + 1))
            })?;
            continue;
        }
        let nv = num_vars
            .ok_or_else(|| Error::invalid(format!("line {}: clause before header", lineno + 1)))?;
        let mut lits = Vec::new();
        for tok in line.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| {
                Error::invalid(format!("line {}: bad literal '{tok}'", lineno + 1))
            })?;
            if v == 0 {
                break;
            }
            if v.unsigned_abs() as usize > nv {
                return Err(Error::invalid(format!(
                    "line {}: literal {v} out of range",
                    lineno + 1
                )));
            }
            lits.push(Lit {
                var: v.unsigned_abs() as usize - 1,
                positive: v > 0,
            });
        }
        if lits.len() != 2 {
            return Err(Error::invalid(format!(
                "line {}: expected exactly two literals, got {}",
                lineno + 1,
                lits.len()
            )));
        }
        clauses.push((lits[0], lits[1]));
    }
    let nv = num_vars.ok_or_else(|| Error::invalid("missing 'p cnf' header"))?;
    if declared_clauses != clauses.len() {
        return Err(Error::invalid(format!(
            "header declares {declared_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    Cnf2::new(nv, clauses)
}
