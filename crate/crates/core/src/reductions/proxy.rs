use std::collections::BTreeSet;

use super::{ReductionOutput, ReductionParams};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Vertex};
use crate::roles::VertexRoleMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    /// The tail wants to match the head.
    Coordinate,
    /// The tail wants to differ from the head.
    Anti,
}

/// Directed skeleton with every arc labeled coordinate or anti-coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGameSpec {
    n: usize,
    arcs: Vec<(Vertex, Vertex, ArcKind)>,
    k: Color,
}

impl MixedGameSpec {
    pub fn new(n: usize, arcs: Vec<(Vertex, Vertex, ArcKind)>, k: Color) -> Result<Self> {
        if k < 2 {
            return Err(Error::TooFewColors { k, min: 2 });
        }
        let mut seen = BTreeSet::new();
        for &(u, v, _) in &arcs {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(MixedGameSpec { n, arcs, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex, ArcKind)] {
        &self.arcs
    }

    /// Parses `p <n> <m> mixed` followed by `a <u> <v> <c|x>` lines.
    pub fn parse(text: &str, k: Color) -> Result<Self> {
        let mut header = None;
        let mut arcs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let syntax = |msg: &str| Error::Syntax {
                line: line_no,
                msg: msg.to_string(),
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                [t, ..] if *t == "c" || t.starts_with('#') => {}
                ["p", n, m, "mixed"] => {
                    if header.is_some() {
                        return Err(syntax("second header"));
                    }
                    let n: usize = n.parse().map_err(|_| syntax("bad vertex count"))?;
                    let m: usize = m.parse().map_err(|_| syntax("bad arc count"))?;
                    header = Some((n, m));
                }
                ["a", u, v, kind] => {
                    if header.is_none() {
                        return Err(syntax("arc before header"));
                    }
                    let u: usize = u.parse().map_err(|_| syntax("bad vertex"))?;
                    let v: usize = v.parse().map_err(|_| syntax("bad vertex"))?;
                    let kind = match *kind {
                        "c" => ArcKind::Coordinate,
                        "x" => ArcKind::Anti,
                        _ => return Err(syntax("arc label must be c or x")),
                    };
                    arcs.push((u, v, kind));
                }
                _ => return Err(syntax("expected `p <n> <m> mixed` or `a <u> <v> <c|x>`")),
            }
        }
        let (n, m) = header.ok_or(Error::Syntax {
            line: 0,
            msg: "missing header".into(),
        })?;
        if arcs.len() != m {
            return Err(Error::CountMismatch {
                what: "arcs",
                declared: m,
                found: arcs.len(),
            });
        }
        MixedGameSpec::new(n, arcs, k)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("p {} {} mixed\n", self.n, self.arcs.len());
        for &(u, v, kind) in &self.arcs {
            let c = match kind {
                ArcKind::Coordinate => 'c',
                ArcKind::Anti => 'x',
            };
            s.push_str(&format!("a {u} {v} {c}\n"));
        }
        s
    }
}

/// Rewrites a mixed game as a pure anti-coordination digraph.
///
/// Each coordinate arc `(u, v)` gets its own bidirected `K_{k-1}` proxy
/// (a single vertex when `k = 2`) with arcs `u -> p` and `p -> v` for every
/// proxy vertex `p`. In a stable coloring the proxy and `v` use all `k`
/// colors, so `u` is left with the color of `v`.
pub fn coordination_proxy_transform(spec: &MixedGameSpec) -> Result<ReductionOutput> {
    let mut b = GraphBuilder::new(true);
    let mut roles = VertexRoleMap::new();
    for v in 1..=spec.n {
        b.add_vertex();
        roles.push(format!("original:{v}"));
    }
    for &(u, v, kind) in &spec.arcs {
        match kind {
            ArcKind::Anti => b.arc(u, v),
            ArcKind::Coordinate => {
                let proxy: Vec<_> = (1..spec.k as usize)
                    .map(|i| {
                        roles.push(format!("proxy:{u}-{v}:{i}"));
                        b.add_vertex()
                    })
                    .collect();
                b.clique(&proxy);
                for &p in &proxy {
                    b.arc(u, p);
                    b.arc(p, v);
                }
            }
        }
    }
    Ok(ReductionOutput {
        graph: b.build()?,
        roles,
        params: ReductionParams {
            construction: "coordination-proxy",
            k: spec.k,
            copies: None,
            gadget_version: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::Mode;
    use crate::search::{enumerate_stable, DEFAULT_BUDGET};

    fn endpoints_agree(k: Color, expected_n: usize) {
        let spec = MixedGameSpec::new(2, vec![(1, 2, ArcKind::Coordinate)], k).unwrap();
        let r = coordination_proxy_transform(&spec).unwrap();
        assert_eq!(r.graph.n(), expected_n);
        let q = enumerate_stable(&r.graph, k, Mode::Stable, DEFAULT_BUDGET).unwrap();
        assert!(!q.is_empty());
        assert!(q.iter().all(|c| c.get(1) == c.get(2)));
    }

    #[test]
    fn coordinate_arc_k2() {
        endpoints_agree(2, 3);
    }

    #[test]
    fn coordinate_arc_k3() {
        endpoints_agree(3, 4);
    }

    #[test]
    fn anti_arc_is_copied() {
        let spec = MixedGameSpec::new(2, vec![(1, 2, ArcKind::Anti)], 2).unwrap();
        let r = coordination_proxy_transform(&spec).unwrap();
        assert_eq!(r.graph.n(), 2);
        assert_eq!(r.graph.arcs().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn file_round_trip() {
        let text = "# demo\nc note\np 3 2 mixed\na 1 2 c\na 2 3 x\n";
        let spec = MixedGameSpec::parse(text, 3).unwrap();
        assert_eq!(spec.arcs()[0], (1, 2, ArcKind::Coordinate));
        assert_eq!(MixedGameSpec::parse(&spec.to_text(), 3).unwrap(), spec);
        assert!(MixedGameSpec::parse("p 2 1 mixed\na 1 2 q\n", 2).is_err());
        assert!(matches!(
            MixedGameSpec::parse("p 2 2 mixed\na 1 2 c\n", 2),
            Err(Error::CountMismatch { .. })
        ));
        assert!(MixedGameSpec::parse("p 2 1 mixed\na 1 3 c\n", 2).is_err());
    }
}
