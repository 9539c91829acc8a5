use std::fmt;
use std::str::FromStr;

use super::{ReductionOutput, ReductionParams};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::roles::VertexRoleMap;

/// Replaces every edge by two opposite arcs.
pub fn undirected_to_directed(g: &Graph) -> Result<Graph> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    Graph::new(g.n(), true, g.arcs())
}

fn originals(g: &Graph, b: &mut GraphBuilder, roles: &mut VertexRoleMap) {
    for v in g.vertices() {
        b.add_vertex();
        roles.push(format!("original:{v}"));
    }
}

/// Balanced unfriendly partition to stable directed 2-coloring.
///
/// Adds `u` and `v` (mutual arcs, each with arcs to every original vertex),
/// `w` with the arc `w -> v`, and a directed 3-cycle whose first vertex has
/// arcs to `u` and `w`. The cycle settles only if `u` and `w` share a color,
/// which happens exactly when the original vertices split evenly.
pub fn reduce_bup_to_directed2(g: &Graph) -> Result<ReductionOutput> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    if g.n() % 2 == 1 {
        return Err(Error::OddOrder(g.n()));
    }
    let mut b = GraphBuilder::new(true);
    let mut roles = VertexRoleMap::new();
    originals(g, &mut b, &mut roles);
    for (a, c) in g.arcs() {
        b.arc(a, c);
    }
    let mut named = |name: &str| {
        roles.push(name);
        b.add_vertex()
    };
    let (u, v, w) = (named("u"), named("v"), named("w"));
    let t = [named("cycle:1"), named("cycle:2"), named("cycle:3")];
    b.biarc(u, v);
    for x in g.vertices() {
        b.arc(u, x);
        b.arc(v, x);
    }
    b.arc(w, v);
    b.arc(t[0], t[1]);
    b.arc(t[1], t[2]);
    b.arc(t[2], t[0]);
    b.arc(t[0], u);
    b.arc(t[0], w);
    Ok(ReductionOutput {
        graph: b.build()?,
        roles,
        params: ReductionParams {
            construction: "bup-directed2",
            k: 2,
            copies: None,
            gadget_version: None,
        },
    })
}

/// How many `K_{k-2}` copies the `k`-color directed reduction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Copies {
    /// `n^3`.
    Paper,
    /// `n`, the least count that still dominates.
    Min,
    Exact(usize),
}

impl Copies {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            Copies::Paper => n.pow(3),
            Copies::Min => n,
            Copies::Exact(c) => c,
        }
    }
}

impl FromStr for Copies {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Copies::Paper),
            "min" => Ok(Copies::Min),
            _ => s
                .parse()
                .map(Copies::Exact)
                .map_err(|_| Error::InvalidParameter(format!("copies must be paper, min or a count, got `{s}`"))),
        }
    }
}

impl fmt::Display for Copies {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Copies::Paper => f.write_str("paper"),
            Copies::Min => f.write_str("min"),
            Copies::Exact(c) => write!(f, "{c}"),
        }
    }
}

/// Stable directed 2-coloring to stable directed `k`-coloring.
///
/// Adds mutually adjacent `x`, `y` and `copies` bidirected copies of
/// `K_{k-2}`; every copy vertex points at `x` and `y`, and every original
/// vertex points at every copy vertex. Copy vertices then take the `k - 2`
/// colors not used on `x`, `y`, and those colors are crowded out for the
/// original vertices, which are left playing the 2-color game.
pub fn reduce_directed2_to_directedk(g: &Graph, k: Color, copies: usize) -> Result<ReductionOutput> {
    if !g.is_directed() {
        return Err(Error::UndirectedUnsupported);
    }
    if k < 3 {
        return Err(Error::TooFewColors { k, min: 3 });
    }
    if copies < g.n() {
        return Err(Error::InvalidParameter(format!(
            "copies = {copies} is below the vertex count {}",
            g.n()
        )));
    }
    let mut b = GraphBuilder::new(true);
    let mut roles = VertexRoleMap::new();
    originals(g, &mut b, &mut roles);
    for (a, c) in g.arcs() {
        b.arc(a, c);
    }
    roles.push("x");
    let x = b.add_vertex();
    roles.push("y");
    let y = b.add_vertex();
    b.biarc(x, y);
    for i in 1..=copies {
        let copy: Vec<_> = (1..=k as usize - 2)
            .map(|j| {
                roles.push(format!("copy:{i}:{j}"));
                b.add_vertex()
            })
            .collect();
        b.clique(&copy);
        for &c in &copy {
            b.arc(c, x);
            b.arc(c, y);
            for o in g.vertices() {
                b.arc(o, c);
            }
        }
    }
    Ok(ReductionOutput {
        graph: b.build()?,
        roles,
        params: ReductionParams {
            construction: "directed2-directedk",
            k,
            copies: Some(copies),
            gadget_version: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Coloring;
    use crate::game::{stability, Mode, Stability};
    use crate::search::{enumerate_stable, search_stable, DEFAULT_BUDGET};

    #[test]
    fn bidirecting_preserves_classification() {
        let cases = [
            (
                Graph::complete(2, false).unwrap(),
                vec![1, 2],
                Stability::StrictlyStable,
            ),
            (
                Graph::complete(3, false).unwrap(),
                vec![1, 1, 2],
                Stability::StableNonStrict,
            ),
            (Graph::path(3), vec![1, 2, 1], Stability::StrictlyStable),
        ];
        for (g, c, want) in cases {
            let d = undirected_to_directed(&g).unwrap();
            assert_eq!(d.m(), 2 * g.m());
            let c = Coloring::new(2, c).unwrap();
            assert_eq!(stability(&g, &c), Ok(want));
            assert_eq!(stability(&d, &c), Ok(want));
        }
        assert!(undirected_to_directed(&Graph::directed_cycle(3).unwrap()).is_err());
    }

    #[test]
    fn bup_examples() {
        let k4 = reduce_bup_to_directed2(&Graph::complete(4, false).unwrap()).unwrap();
        assert_eq!(k4.graph.n(), 10);
        assert!(!enumerate_stable(&k4.graph, 2, Mode::Stable, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        let star = reduce_bup_to_directed2(&Graph::star(3)).unwrap();
        assert!(enumerate_stable(&star.graph, 2, Mode::Stable, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        let k2 = reduce_bup_to_directed2(&Graph::complete(2, false).unwrap()).unwrap();
        assert_eq!(k2.graph.n(), 8);
        assert!(search_stable(&k2.graph, 2, Mode::Stable).is_some());
        assert_eq!(reduce_bup_to_directed2(&Graph::path(3)), Err(Error::OddOrder(3)));
    }

    #[test]
    fn directedk_examples() {
        let arc = Graph::new(2, true, [(1, 2)]).unwrap();
        let r = reduce_directed2_to_directedk(&arc, 3, 2).unwrap();
        assert_eq!(r.graph.n(), 2 + 2 + 2);
        let c = search_stable(&r.graph, 3, Mode::Stable).expect("stable coloring");
        let (x, y) = (r.roles.find("x").unwrap(), r.roles.find("y").unwrap());
        assert_ne!(c.get(x), c.get(y));

        let cyc = Graph::directed_cycle(3).unwrap();
        let r = reduce_directed2_to_directedk(&cyc, 3, 3).unwrap();
        assert_eq!(search_stable(&r.graph, 3, Mode::Stable), None);
        assert!(enumerate_stable(&r.graph, 3, Mode::Stable, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());

        assert!(reduce_directed2_to_directedk(&cyc, 3, 2).is_err());
        assert!(reduce_directed2_to_directedk(&cyc, 2, 3).is_err());
    }

    #[test]
    fn copies_parse() {
        assert_eq!("paper".parse(), Ok(Copies::Paper));
        assert_eq!("min".parse::<Copies>().unwrap().resolve(4), 4);
        assert_eq!("7".parse(), Ok(Copies::Exact(7)));
        assert_eq!(Copies::Paper.resolve(3), 27);
        assert!("lots".parse::<Copies>().is_err());
    }
}
