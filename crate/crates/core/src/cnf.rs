//! CNF formulas, truth assignments and the DIMACS CNF format.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A literal is a signed, 1-based variable id; never 0.
pub type Literal = i32;

pub fn var_of(lit: Literal) -> usize {
    lit.unsigned_abs() as usize - 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::input(format!("clause {} is empty", j + 1)));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > variable_count {
                    return Err(Error::input(format!(
                        "literal {lit} in clause {} out of range for {variable_count} variables",
                        j + 1
                    )));
                }
            }
        }
        Ok(CnfFormula { variable_count, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Reads DIMACS CNF. Comment lines start with `c`; clauses may span lines
    /// and are terminated by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if header.is_some() || fields.len() != 3 || fields[0] != "cnf" {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("bad problem line {line:?}"),
                    });
                }
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("bad count {s:?}"),
                    })
                };
                header = Some((parse(fields[1])?, parse(fields[2])?));
                continue;
            }
            if header.is_none() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "clause before problem line".into(),
                });
            }
            for tok in line.split_whitespace() {
                let lit: Literal = tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad literal {tok:?}"),
                })?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(lit);
                }
            }
        }
        let (vars, count) = header.ok_or_else(|| Error::Parse {
            line: 0,
            message: "missing problem line".into(),
        })?;
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            return Err(Error::input(format!(
                "header announces {count} clauses but {} were read",
                clauses.len()
            )));
        }
        CnfFormula::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn literal(&self, lit: Literal) -> bool {
        let v = self.values[var_of(lit)];
        if lit > 0 {
            v
        } else {
            !v
        }
    }

    /// Parses a whitespace or comma separated literal list such as
    /// `"1 -2 3"`; unmentioned variables default to false. A trailing `0`
    /// and a leading `v` (solver output style) are accepted.
    pub fn parse_literals(text: &str, variable_count: usize) -> Result<Self> {
        let mut values = vec![false; variable_count];
        for tok in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty() && *t != "v")
        {
            let lit: Literal = tok
                .parse()
                .map_err(|_| Error::input(format!("bad literal {tok:?} in assignment")))?;
            if lit == 0 {
                continue;
            }
            if lit.unsigned_abs() as usize > variable_count {
                return Err(Error::input(format!("literal {lit} out of range")));
            }
            values[var_of(lit)] = lit > 0;
        }
        Ok(Assignment { values })
    }

    pub fn to_literals(&self) -> Vec<Literal> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &b)| if b { i as Literal + 1 } else { -(i as Literal + 1) })
            .collect()
    }
}

/// True iff every clause has a literal made true by `a`.
pub fn evaluate_assignment(formula: &CnfFormula, a: &Assignment) -> Result<bool> {
    if a.values.len() != formula.variable_count {
        return Err(Error::input(format!(
            "assignment has {} values but formula has {} variables",
            a.values.len(),
            formula.variable_count
        )));
    }
    Ok(formula
        .clauses
        .iter()
        .all(|c| c.iter().any(|&lit| a.literal(lit))))
}
