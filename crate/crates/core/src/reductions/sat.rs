//! 3-SAT to strictly stable 2-coloring.
//!
//! Layout, in vertex-id order:
//! 1. per variable `x`, a reference literal pair `ref:x:a`, `ref:x:b`;
//! 2. per clause `j`, a clause gadget whose literal pairs are labeled
//!    `clause:j:lit:i:<signed var>:a|b`;
//! 3. per occurrence, a persistence (positive) or negation (negative)
//!    connector from the variable's reference pair to the occurrence pair;
//! 4. two pendants on every literal vertex, reference pairs included.
//!
//! A literal vertex then has at least three neighbors that always oppose
//! it (two pendants and a connector middle) against at most one clause
//! neighbor, so it is strictly stable in any coloring where the rest is.

use super::gadgets::{clause_gadget, negation_gadget, persistence_gadget, Gadget, GadgetVersion};
use super::{ReductionOutput, ReductionParams};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::game::{stability, Stability};
use crate::graph::{GraphBuilder, Vertex};
use crate::roles::VertexRoleMap;
use crate::search::cnf::{Cnf, Literal};

const VERSION: GadgetVersion = GadgetVersion::HubV1;

struct Assembler {
    b: GraphBuilder,
    roles: VertexRoleMap,
}

impl Assembler {
    fn vertex(&mut self, label: String) -> Vertex {
        let v = self.b.add_vertex();
        let r = self.roles.push(label);
        debug_assert_eq!(v, r);
        v
    }

    /// Copies `gadget` in, identifying its ports with existing vertices
    /// where `bound` says so. Returns the id assigned to each gadget vertex.
    fn embed(&mut self, gadget: &Gadget, prefix: &str, bound: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        let mut map = vec![0; gadget.graph.n() + 1];
        for (&(ga, gb), &(a, b)) in gadget.ports.iter().zip(bound) {
            map[ga] = a;
            map[gb] = b;
        }
        for v in gadget.graph.vertices() {
            if map[v] == 0 {
                map[v] = self.vertex(format!("{prefix}:{}", gadget.labels[v - 1]));
            }
        }
        for (a, b) in gadget.graph.edges() {
            self.b.arc(map[a], map[b]);
        }
        map
    }
}

fn signed(l: Literal) -> String {
    l.to_string()
}

pub fn reduce_3sat_to_strict2(f: &Cnf) -> Result<ReductionOutput> {
    let clause = clause_gadget(VERSION)?;
    let persist = persistence_gadget()?;
    let negate = negation_gadget()?;
    let mut asm = Assembler {
        b: GraphBuilder::new(false),
        roles: VertexRoleMap::new(),
    };

    let refs: Vec<(Vertex, Vertex)> = (1..=f.vars())
        .map(|x| (asm.vertex(format!("ref:{x}:a")), asm.vertex(format!("ref:{x}:b"))))
        .collect();
    let mut literal_vertices: Vec<Vertex> = refs.iter().flat_map(|&(a, b)| [a, b]).collect();

    let mut occurrences = Vec::new();
    for (j, lits) in f.clauses().iter().enumerate() {
        let j = j + 1;
        // literal pairs first so their labels carry the literal
        let pairs: Vec<(Vertex, Vertex)> = lits
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let stem = format!("clause:{j}:lit:{}:{}", i + 1, signed(l));
                (asm.vertex(format!("{stem}:a")), asm.vertex(format!("{stem}:b")))
            })
            .collect();
        literal_vertices.extend(pairs.iter().flat_map(|&(a, b)| [a, b]));
        asm.embed(&clause, &format!("clause:{j}"), &pairs);
        occurrences.extend(lits.iter().zip(pairs).enumerate().map(|(i, (&l, p))| (j, i + 1, l, p)));
    }

    for (j, i, l, pair) in occurrences {
        let (gadget, kind) = if l.negated {
            (&negate, "negation")
        } else {
            (&persist, "persistence")
        };
        asm.embed(gadget, &format!("connector:{j}:{i}:{kind}"), &[refs[l.var - 1], pair]);
    }

    for v in literal_vertices {
        for _ in 0..2 {
            let p = asm.vertex(format!("pendant:{v}"));
            asm.b.arc(v, p);
        }
    }

    Ok(ReductionOutput {
        graph: asm.b.build()?,
        roles: asm.roles,
        params: ReductionParams {
            construction: "sat-strict2",
            k: 2,
            copies: None,
            gadget_version: Some(VERSION.tag()),
        },
    })
}

/// Rebuilds the source formula from the clause literal labels.
pub fn formula_from_roles(roles: &VertexRoleMap) -> Result<Cnf> {
    let bad = |label: &str| Error::InvalidParameter(format!("unexpected role label `{label}`"));
    let mut clauses: Vec<[Option<Literal>; 3]> = Vec::new();
    let mut vars = 0;
    for (_, label) in roles.iter() {
        let parts: Vec<&str> = label.split(':').collect();
        if parts[0] == "ref" {
            let x: usize = parts.get(1).and_then(|s| s.parse().ok()).ok_or_else(|| bad(label))?;
            vars = vars.max(x);
        }
        if parts.len() != 6 || parts[0] != "clause" || parts[2] != "lit" {
            continue;
        }
        let j: usize = parts[1].parse().map_err(|_| bad(label))?;
        let i: usize = parts[3].parse().map_err(|_| bad(label))?;
        let s: i64 = parts[4].parse().map_err(|_| bad(label))?;
        if j == 0 || !(1..=3).contains(&i) || s == 0 {
            return Err(bad(label));
        }
        if clauses.len() < j {
            clauses.resize(j, [None; 3]);
        }
        clauses[j - 1][i - 1] = Some(Literal {
            var: s.unsigned_abs() as usize,
            negated: s < 0,
        });
    }
    let clauses = clauses
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            let lits: Option<Vec<Literal>> = c.into_iter().collect();
            lits.and_then(|l| l.try_into().ok()).ok_or(Error::MalformedClause {
                index: j + 1,
                msg: "missing literal pair".into(),
            })
        })
        .collect::<Result<Vec<[Literal; 3]>>>()?;
    Cnf::new(vars, clauses)
}

/// Reads the assignment off a strictly stable coloring: a variable is true
/// when its reference pair is monochromatic. The assignment is checked
/// against the formula recovered from the role labels.
pub fn extract_assignment(r: &ReductionOutput, c: &Coloring) -> Result<Vec<bool>> {
    if stability(&r.graph, c)? != Stability::StrictlyStable {
        return Err(Error::NotStrictlyStable);
    }
    let f = formula_from_roles(&r.roles)?;
    let assignment = (1..=f.vars())
        .map(|x| {
            let a = r.roles.find(&format!("ref:{x}:a"));
            let b = r.roles.find(&format!("ref:{x}:b"));
            match (a, b) {
                (Some(a), Some(b)) => Ok(c.get(a) == c.get(b)),
                _ => Err(Error::InvalidParameter(format!("no reference pair for variable {x}"))),
            }
        })
        .collect::<Result<Vec<bool>>>()?;
    if !f.eval(&assignment) {
        return Err(Error::ExtractionUnsatisfied);
    }
    Ok(assignment)
}
