//! Simple graphs with 1-indexed vertices.
//!
//! Undirected graphs are stored as symmetric arc pairs, so every routine that
//! walks out-neighbors works unchanged on both kinds. Out-neighbor lists are
//! kept sorted ascending, which makes iteration order (and therefore every
//! search and trace built on top) deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Vertex id, 1-based.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    directed: bool,
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a canonical graph from an arc list.
    ///
    /// For undirected graphs `(a, b)` and `(b, a)` name the same edge, so
    /// listing both is a duplicate.
    pub fn new<I>(n: usize, directed: bool, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut sets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
        let mut m = 0;
        for (a, b) in arcs {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !sets[a - 1].insert(b) {
                return Err(Error::DuplicateArc(a, b));
            }
            if !directed {
                sets[b - 1].insert(a);
            }
            m += 1;
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Graph { n, directed, adj, m })
    }

    /// `n` vertices, no arcs.
    pub fn empty(n: usize, directed: bool) -> Self {
        Graph {
            n,
            directed,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// The complete graph `K_q`; when `directed`, every ordered pair is an arc.
    pub fn complete(q: usize, directed: bool) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameter("complete graph needs q >= 1".into()));
        }
        let pairs = (1..=q).flat_map(|a| (a + 1..=q).map(move |b| (a, b)));
        if directed {
            Graph::new(q, true, pairs.flat_map(|(a, b)| [(a, b), (b, a)]))
        } else {
            Graph::new(q, false, pairs)
        }
    }

    /// Undirected cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
        }
        Graph::new(n, false, (1..=n).map(|v| (v, v % n + 1)))
    }

    /// Directed cycle `1 -> 2 -> ... -> n -> 1`, `n >= 2`.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("directed cycle needs n >= 2".into()));
        }
        Graph::new(n, true, (1..=n).map(|v| (v, v % n + 1)))
    }

    /// Undirected path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, false, (1..n).map(|v| (v, v + 1))).expect("path arcs are valid")
    }

    /// Star `K_{1,leaves}` centered at vertex 1.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, false, (2..=leaves + 1).map(|v| (1, v))).expect("star arcs are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arc count for directed graphs, edge count for undirected ones.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    pub fn has_arc(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// Every stored arc `(a, b)`, both orientations for undirected graphs.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().map(move |&b| (i + 1, b)))
    }

    /// Canonical edge list: arcs for directed graphs, `a < b` pairs otherwise.
    /// Its length is always `m()`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let directed = self.directed;
        self.arcs().filter(|&(a, b)| directed || a < b).collect()
    }

    /// In-neighbor lists (sorted), indexed by `v - 1`.
    pub fn in_neighbors(&self) -> Vec<Vec<Vertex>> {
        let mut preds = vec![Vec::new(); self.n];
        for (a, b) in self.arcs() {
            preds[b - 1].push(a);
        }
        preds
    }

    /// Vertices with no out-neighbors.
    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Places `other` after `self`, renumbering its vertices by
    /// `offset = self.n()`. Returns the union and the offset.
    pub fn disjoint_union(&self, other: &Graph) -> Result<(Graph, usize)> {
        if self.directed != other.directed {
            return Err(Error::DirectednessMismatch);
        }
        let offset = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|&b| b + offset).collect()));
        let g = Graph {
            n: self.n + other.n,
            directed: self.directed,
            adj,
            m: self.m + other.m,
        };
        Ok((g, offset))
    }

    /// Converts to a 0-based adjacency list for hot loops.
    pub(crate) fn zero_based(&self) -> Vec<Vec<usize>> {
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().map(|&b| b - 1).collect())
            .collect()
    }
}

/// Incremental builder used by the reduction constructors.
#[derive(Debug, Clone)]
pub(crate) struct GraphBuilder {
    directed: bool,
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
}

impl GraphBuilder {
    pub fn new(directed: bool) -> Self {
        GraphBuilder {
            directed,
            n: 0,
            arcs: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n
    }

    pub fn add_vertices(&mut self, count: usize) -> Vec<Vertex> {
        (0..count).map(|_| self.add_vertex()).collect()
    }

    /// Undirected edge, or a single arc in a directed builder.
    pub fn arc(&mut self, a: Vertex, b: Vertex) {
        self.arcs.push((a, b));
    }

    /// Both orientations; only meaningful for directed builders.
    pub fn biarc(&mut self, a: Vertex, b: Vertex) {
        debug_assert!(self.directed);
        self.arcs.push((a, b));
        self.arcs.push((b, a));
    }

    /// Makes `vs` a clique (bidirected when the builder is directed).
    pub fn clique(&mut self, vs: &[Vertex]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.directed {
                    self.biarc(a, b);
                } else {
                    self.arc(a, b);
                }
            }
        }
    }

    pub fn build(self) -> Result<Graph> {
        Graph::new(self.n, self.directed, self.arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_edge() {
        let g = Graph::new(2, false, [(1, 2)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.out_neighbors(1), &[2]);
        assert_eq!(g.out_neighbors(2), &[1]);
    }

    #[test]
    fn directed_three_cycle() {
        let g = Graph::new(3, true, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.has_arc(3, 1));
        assert!(!g.has_arc(1, 3));
        assert_eq!(g, Graph::directed_cycle(3).unwrap());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Graph::new(3, false, [(1, 2), (1, 2)]), Err(Error::DuplicateArc(1, 2)));
        assert_eq!(Graph::new(3, false, [(1, 2), (2, 1)]), Err(Error::DuplicateArc(2, 1)));
        assert!(Graph::new(3, true, [(1, 2), (2, 1)]).is_ok());
        assert_eq!(Graph::new(3, false, [(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, false, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert!(matches!(
            Graph::new(3, false, [(0, 1)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn complete_graphs() {
        let k1 = Graph::complete(1, false).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(Graph::complete(3, false).unwrap().m(), 3);
        assert_eq!(Graph::complete(4, true).unwrap().m(), 12);
        assert!(Graph::complete(0, false).is_err());
    }

    #[test]
    fn unions() {
        let k2 = Graph::complete(2, false).unwrap();
        let (g, off) = k2.disjoint_union(&k2).unwrap();
        assert_eq!(off, 2);
        assert_eq!(g.edges(), vec![(1, 2), (3, 4)]);

        let (g, off) = Graph::complete(1, false)
            .unwrap()
            .disjoint_union(&Graph::complete(3, false).unwrap())
            .unwrap();
        assert_eq!((g.n(), g.m(), off), (4, 3, 1));

        let d = Graph::directed_cycle(3).unwrap();
        assert_eq!(k2.disjoint_union(&d), Err(Error::DirectednessMismatch));
    }

    #[test]
    fn order_insensitive() {
        let a = Graph::new(4, false, [(1, 2), (3, 4), (2, 3)]).unwrap();
        let b = Graph::new(4, false, [(4, 3), (2, 3), (2, 1)]).unwrap();
        assert_eq!(a, b);
    }
}
