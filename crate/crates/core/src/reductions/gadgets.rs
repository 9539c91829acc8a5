//! Two-color gadgets for the strict-equilibrium reduction from 3-SAT.
//!
//! A literal is a pair of vertices; it reads as true when the pair is
//! monochromatic. Gadgets expose such pairs as ports and are accepted only
//! through exhaustive contract checks over every 2-coloring of the gadget,
//! where only the non-port vertices are required to be strictly stable.
//!
//! Building blocks: a vertex of degree 2 is strictly stable only when both
//! neighbors carry the opposite color, so it forces them equal; a path of two
//! such vertices forces its ends apart. A pendant (degree 1) always opposes
//! its anchor and acts as a fixed vote for it.
//!
//! Clause gadget (`hub-v1`), per literal `i`:
//! * `test:i` is adjacent to both literal vertices and to `hub`. If the
//!   pair is split, `test:i` needs `hub` opposite; if monochromatic, `test:i`
//!   is pinned opposite the pair and ignores `hub`.
//! * `copy:i` mirrors `test:i` through a degree-2 `link:i` and carries one
//!   pendant.
//!
//! `observer` is forced opposite `hub` by a two-vertex chain, watches the
//! three copies and holds one pendant, so it is strictly stable exactly when
//! some copy differs from it, i.e. some `test:i` matches `hub`. With every
//! pair split all tests oppose the hub and the observer fails. `hub` holds
//! three pendants so it tolerates any test colors.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetVersion {
    HubV1,
}

impl GadgetVersion {
    pub fn tag(self) -> &'static str {
        match self {
            GadgetVersion::HubV1 => "hub-v1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    Clause,
    Persistence,
    Negation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: Graph,
    /// Literal pairs for a clause gadget; `[side_a, side_b]` for connectors.
    pub ports: Vec<(Vertex, Vertex)>,
    /// Role label of each vertex, relative to the gadget.
    pub labels: Vec<String>,
}

impl Gadget {
    pub fn is_port(&self, v: Vertex) -> bool {
        self.ports.iter().any(|&(a, b)| a == v || b == v)
    }

    pub fn internal_vertices(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| !self.is_port(v)).collect()
    }
}

fn build(kind: GadgetKind, labels: &[&str], edges: &[(Vertex, Vertex)], ports: Vec<(Vertex, Vertex)>) -> Gadget {
    Gadget {
        kind,
        graph: Graph::new(labels.len(), false, edges.iter().copied()).expect("gadget edges are valid"),
        ports,
        labels: labels.iter().map(|s| s.to_string()).collect(),
    }
}

fn raw_clause_gadget() -> Gadget {
    const LABELS: [&str; 26] = [
        "lit:1:a",
        "lit:1:b",
        "lit:2:a",
        "lit:2:b",
        "lit:3:a",
        "lit:3:b", // 1..=6
        "test:1",
        "test:2",
        "test:3", // 7..=9
        "link:1",
        "link:2",
        "link:3", // 10..=12
        "copy:1",
        "copy:2",
        "copy:3", // 13..=15
        "copy-pendant:1",
        "copy-pendant:2",
        "copy-pendant:3", // 16..=18
        "hub",
        "observer",
        "chain:1",
        "chain:2",
        "observer-pendant", // 19..=23
        "hub-pendant:1",
        "hub-pendant:2",
        "hub-pendant:3", // 24..=26
    ];
    const HUB: Vertex = 19;
    const OBSERVER: Vertex = 20;
    let mut edges = Vec::new();
    for i in 0..3 {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        let (test, link, copy, pendant) = (7 + i, 10 + i, 13 + i, 16 + i);
        edges.extend([(a, test), (b, test), (test, HUB), (test, link), (link, copy)]);
        edges.extend([(copy, OBSERVER), (copy, pendant)]);
    }
    edges.extend([(OBSERVER, 21), (21, 22), (22, HUB), (OBSERVER, 23)]);
    edges.extend([(HUB, 24), (HUB, 25), (HUB, 26)]);
    build(GadgetKind::Clause, &LABELS, &edges, vec![(1, 2), (3, 4), (5, 6)])
}

fn raw_persistence_gadget() -> Gadget {
    build(
        GadgetKind::Persistence,
        &["a:1", "a:2", "b:1", "b:2", "mid:1", "mid:2"],
        &[(1, 5), (5, 3), (2, 6), (6, 4)],
        vec![(1, 2), (3, 4)],
    )
}

fn raw_negation_gadget() -> Gadget {
    build(
        GadgetKind::Negation,
        &["a:1", "a:2", "b:1", "b:2", "mid:1", "neg:1", "neg:2"],
        &[(1, 5), (5, 3), (2, 6), (6, 7), (7, 4)],
        vec![(1, 2), (3, 4)],
    )
}

/// For every coloring of the port vertices (bit `2i` is `ports[i].0`, bit
/// `2i + 1` is `ports[i].1`), whether some coloring of the remaining vertices
/// makes all of them strictly stable. Visits all `2^n` colorings; returns
/// the table and that count.
pub fn extendable_port_colorings(g: &Gadget) -> (Vec<bool>, u64) {
    let n = g.graph.n();
    assert!(n <= 32, "gadget too large for exhaustive checking");
    // bit positions: ports first, in port order, then internal vertices
    let mut order: Vec<Vertex> = g.ports.iter().flat_map(|&(a, b)| [a, b]).collect();
    let internal = g.internal_vertices();
    order.extend(&internal);
    let mut bit = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        bit[v] = i;
    }
    let nbr_mask: Vec<u64> = order
        .iter()
        .map(|&v| g.graph.out_neighbors(v).iter().fold(0u64, |m, &w| m | 1 << bit[w]))
        .collect();
    let p = 2 * g.ports.len();
    let r = internal.len();
    let table: Vec<bool> = (0u64..1 << p)
        .into_par_iter()
        .map(|ports| {
            let mut ok = false;
            for inner in 0u64..1 << r {
                let colors = ports | inner << p;
                let strict = (p..n).all(|i| {
                    let same = if colors >> i & 1 == 1 {
                        nbr_mask[i] & colors
                    } else {
                        nbr_mask[i] & !colors
                    };
                    let same = same.count_ones();
                    nbr_mask[i].count_ones() > 2 * same
                });
                ok |= strict;
            }
            ok
        })
        .collect();
    (table, 1u64 << n)
}

fn pair_mono(mask: u64, i: usize) -> bool {
    (mask >> (2 * i) & 1) == (mask >> (2 * i + 1) & 1)
}

/// Runs the exhaustive contract check for `g`, returning the number of
/// colorings examined.
pub fn check_contract(g: &Gadget) -> Result<u64> {
    let (table, examined) = extendable_port_colorings(g);
    let fail = |msg: String| Err(Error::ContractViolation(msg));
    match g.kind {
        GadgetKind::Clause => {
            for (mask, &ext) in table.iter().enumerate() {
                let any_true = (0..3).any(|i| pair_mono(mask as u64, i));
                if ext != any_true {
                    return fail(format!(
                        "clause gadget: literal coloring {mask:06b} extendable={ext}, some literal true={any_true}"
                    ));
                }
            }
        }
        GadgetKind::Persistence | GadgetKind::Negation => {
            let want_equal = g.kind == GadgetKind::Persistence;
            for (mask, &ext) in table.iter().enumerate() {
                let m = mask as u64;
                if ext && (pair_mono(m, 0) == pair_mono(m, 1)) != want_equal {
                    return fail(format!("{:?} gadget: port coloring {mask:04b} is extendable", g.kind));
                }
            }
            // every coloring of either side must extend somehow
            for side in 0..2 {
                for own in 0u64..4 {
                    let extends = (0u64..4).any(|other| {
                        let mask = if side == 0 { own | other << 2 } else { other | own << 2 };
                        table[mask as usize]
                    });
                    if !extends {
                        return fail(format!(
                            "{:?} gadget: side {side} coloring {own:02b} never extends",
                            g.kind
                        ));
                    }
                }
            }
        }
    }
    Ok(examined)
}

fn verified(cell: &'static OnceLock<Result<Gadget>>, raw: fn() -> Gadget) -> Result<Gadget> {
    cell.get_or_init(|| {
        let g = raw();
        check_contract(&g).map(|_| g)
    })
    .clone()
}

/// Clause gadget with literal pairs as ports, contract-checked on first use.
pub fn clause_gadget(version: GadgetVersion) -> Result<Gadget> {
    static CELL: OnceLock<Result<Gadget>> = OnceLock::new();
    match version {
        GadgetVersion::HubV1 => verified(&CELL, raw_clause_gadget),
    }
}

/// Forces `side_a` monochromatic exactly when `side_b` is, by copying each
/// side-a vertex's color onto the matching side-b vertex through a
/// degree-2 middle vertex.
pub fn persistence_gadget() -> Result<Gadget> {
    static CELL: OnceLock<Result<Gadget>> = OnceLock::new();
    verified(&CELL, raw_persistence_gadget)
}

/// Forces `side_a` monochromatic exactly when `side_b` is not: first
/// vertices are tied equal, second vertices are forced apart.
pub fn negation_gadget() -> Result<Gadget> {
    static CELL: OnceLock<Result<Gadget>> = OnceLock::new();
    verified(&CELL, raw_negation_gadget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(cs: [u64; 6]) -> usize {
        cs.iter().enumerate().fold(0, |m, (i, &c)| m | (c as usize) << i)
    }

    #[test]
    fn clause_cases() {
        let g = clause_gadget(GadgetVersion::HubV1).unwrap();
        let (table, examined) = extendable_port_colorings(&g);
        assert_eq!(examined, 1 << 26);
        // all three true
        assert!(table[mask([0, 0, 1, 1, 0, 0])]);
        // none true
        assert!(!table[mask([0, 1, 0, 1, 1, 0])]);
        assert!(!table[mask([1, 0, 1, 0, 1, 0])]);
        // exactly one true
        assert!(table[mask([0, 1, 1, 1, 1, 0])]);
    }

    #[test]
    fn connectors() {
        let p = persistence_gadget().unwrap();
        let (table, _) = extendable_port_colorings(&p);
        // colors are copied across, not just the monochromatic status
        assert!(table[0b0000]);
        assert!(!table[0b1100]);
        // side a = (0, 0), side b = (0, 1): status differs
        assert!(!table[0b1000]);

        let neg = negation_gadget().unwrap();
        let (table, _) = extendable_port_colorings(&neg);
        assert!(table[0b1000]);
        assert!(!table[0b0000]);
        assert_eq!(check_contract(&neg), Ok(1 << 7));
    }

    #[test]
    fn broken_gadget_is_rejected() {
        let mut g = raw_clause_gadget();
        // cut off the hub pendants; isolated vertices are never strictly stable
        g.graph = Graph::new(
            26,
            false,
            g.graph.edges().into_iter().filter(|&(a, b)| !(a == 19 && b >= 24)),
        )
        .unwrap();
        assert!(matches!(check_contract(&g), Err(Error::ContractViolation(_))));
        let mut p = raw_persistence_gadget();
        p.kind = GadgetKind::Negation;
        assert!(matches!(check_contract(&p), Err(Error::ContractViolation(_))));
    }
}
