use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// Variable id, 1-based.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] != self.negated
    }

    fn dimacs(self) -> i64 {
        if self.negated {
            -(self.var as i64)
        } else {
            self.var as i64
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dimacs())
    }
}

/// A 3-CNF formula. Literals may repeat within a clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf {
    vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl Cnf {
    pub fn new(vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (i, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.var == 0 || l.var > vars) {
                return Err(Error::MalformedClause {
                    index: i + 1,
                    msg: format!("variable {} outside 1..={vars}", l.var),
                });
            }
        }
        Ok(Cnf { vars, clauses })
    }

    /// Builds from DIMACS-style signed integers, three per clause.
    pub fn from_signed(vars: usize, clauses: &[[i64; 3]]) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (i, c) in clauses.iter().enumerate() {
            let mut lits = [Literal::pos(1); 3];
            for (slot, &x) in lits.iter_mut().zip(c) {
                if x == 0 {
                    return Err(Error::MalformedClause {
                        index: i + 1,
                        msg: "zero literal".into(),
                    });
                }
                *slot = Literal {
                    var: x.unsigned_abs() as usize,
                    negated: x < 0,
                };
            }
            out.push(lits);
        }
        Cnf::new(vars, out)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// DIMACS `cnf` text.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }

    /// Parses DIMACS `cnf` text: `c` comment lines, a `p cnf <vars> <clauses>`
    /// header, then clauses of exactly three nonzero literals each terminated
    /// by `0`. Clauses may span lines.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<[i64; 3]> = Vec::new();
        let mut current: Vec<i64> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let syntax = |msg: String| Error::Syntax { line: line_no, msg };
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(syntax("second header".into()));
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(syntax("expected `p cnf <vars> <clauses>`".into()));
                }
                let num = |s: &str| s.parse::<usize>().map_err(|e| syntax(format!("`{s}`: {e}")));
                header = Some((num(parts[2])?, num(parts[3])?));
                continue;
            }
            if header.is_none() {
                return Err(syntax("clause before header".into()));
            }
            for tok in line.split_whitespace() {
                let x: i64 = tok.parse().map_err(|e| syntax(format!("`{tok}`: {e}")))?;
                if x == 0 {
                    let lits: [i64; 3] = current.as_slice().try_into().map_err(|_| Error::MalformedClause {
                        index: clauses.len() + 1,
                        msg: format!("{} literals, expected 3", current.len()),
                    })?;
                    clauses.push(lits);
                    current.clear();
                } else {
                    current.push(x);
                }
            }
        }
        let (vars, declared) = header.ok_or(Error::Syntax {
            line: 0,
            msg: "missing `p cnf` header".into(),
        })?;
        if !current.is_empty() {
            return Err(Error::MalformedClause {
                index: clauses.len() + 1,
                msg: "missing terminating 0".into(),
            });
        }
        if clauses.len() != declared {
            return Err(Error::CountMismatch {
                what: "clauses",
                declared,
                found: clauses.len(),
            });
        }
        Cnf::from_signed(vars, &clauses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "c demo\np cnf 3 2\n1 2 -3 0\n-1\n-2 -3 0\n";
        let f = Cnf::parse_dimacs(text).unwrap();
        assert_eq!(f.vars(), 3);
        assert_eq!(f.clauses()[1], [Literal::neg(1), Literal::neg(2), Literal::neg(3)]);
        assert_eq!(Cnf::parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            Cnf::parse_dimacs("p cnf 2 1\n1 2 0\n"),
            Err(Error::MalformedClause { index: 1, .. })
        ));
        assert!(matches!(
            Cnf::parse_dimacs("p cnf 2 1\n1 2 3 0\n"),
            Err(Error::MalformedClause { .. })
        ));
        assert!(matches!(
            Cnf::parse_dimacs("p cnf 2 2\n1 2 2 0\n"),
            Err(Error::CountMismatch { .. })
        ));
        assert!(matches!(
            Cnf::parse_dimacs("p cnf 2 1\n1 x 2 0\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }
}
