//! Payoffs, welfare, the edge potential and stability classification.
//!
//! A vertex's payoff is the number of out-neighbors whose color differs from
//! its own. For undirected graphs out-neighbors are simply neighbors.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stability {
    Unstable,
    StableNonStrict,
    StrictlyStable,
}

impl Stability {
    pub fn is_stable(self) -> bool {
        self != Stability::Unstable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Unstable => "unstable",
            Stability::StableNonStrict => "stable-non-strict",
            Stability::StrictlyStable => "strictly-stable",
        }
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which equilibria a search or enumeration is after.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Stable, strict or not.
    Stable,
    /// Strictly stable only.
    Strict,
}

impl Mode {
    pub fn accepts(self, s: Stability) -> bool {
        match self {
            Mode::Stable => s.is_stable(),
            Mode::Strict => s == Stability::StrictlyStable,
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stable" => Ok(Mode::Stable),
            "strict" => Ok(Mode::Strict),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Stable => "stable",
            Mode::Strict => "strict",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    pub vertex: Vertex,
    pub best_responses: Vec<Color>,
    pub payoff: usize,
    pub unhappy: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub vertices: Vec<VertexReport>,
    pub overall: Stability,
}

impl StabilityReport {
    pub fn unhappy(&self) -> Vec<Vertex> {
        self.vertices.iter().filter(|r| r.unhappy).map(|r| r.vertex).collect()
    }
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<()> {
    if v == 0 || v > g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Number of out-neighbors of `v` holding each color, indexed by `color - 1`.
pub fn color_counts(g: &Graph, c: &Coloring, v: Vertex) -> Vec<usize> {
    let mut counts = vec![0; c.k() as usize];
    for &w in g.out_neighbors(v) {
        counts[c.get(w) as usize - 1] += 1;
    }
    counts
}

pub fn payoff(g: &Graph, c: &Coloring, v: Vertex) -> Result<usize> {
    c.check_for(g)?;
    check_vertex(g, v)?;
    Ok(payoff_unchecked(g, c, v))
}

fn payoff_unchecked(g: &Graph, c: &Coloring, v: Vertex) -> usize {
    let own = c.get(v);
    g.out_neighbors(v).iter().filter(|&&w| c.get(w) != own).count()
}

pub fn social_welfare(g: &Graph, c: &Coloring) -> Result<usize> {
    c.check_for(g)?;
    Ok(g.vertices().map(|v| payoff_unchecked(g, c, v)).sum())
}

/// Number of properly colored edges. Only defined for undirected graphs,
/// where it is an exact potential and equals half the social welfare.
pub fn potential(g: &Graph, c: &Coloring) -> Result<usize> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    c.check_for(g)?;
    Ok(g.edges().into_iter().filter(|&(a, b)| c.get(a) != c.get(b)).count())
}

/// Colors minimizing the number of same-colored out-neighbors. Never empty;
/// a vertex with no out-neighbors gets every color.
pub fn best_response_set(g: &Graph, c: &Coloring, v: Vertex) -> Result<Vec<Color>> {
    c.check_for(g)?;
    check_vertex(g, v)?;
    Ok(argmin_colors(&color_counts(g, c, v)))
}

pub(crate) fn argmin_colors(counts: &[usize]) -> Vec<Color> {
    let min = counts.iter().copied().min().unwrap_or(0);
    counts
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x == min)
        .map(|(i, _)| i as Color + 1)
        .collect()
}

/// True when the current color is not a best response. A color that ties
/// the minimum counts as happy.
pub fn is_unhappy(g: &Graph, c: &Coloring, v: Vertex) -> Result<bool> {
    Ok(!best_response_set(g, c, v)?.contains(&c.get(v)))
}

pub fn classify(g: &Graph, c: &Coloring) -> Result<StabilityReport> {
    c.check_for(g)?;
    let mut all_singleton = true;
    let mut any_unhappy = false;
    let vertices = g
        .vertices()
        .map(|v| {
            let best = argmin_colors(&color_counts(g, c, v));
            let unhappy = !best.contains(&c.get(v));
            any_unhappy |= unhappy;
            all_singleton &= best.len() == 1;
            VertexReport {
                vertex: v,
                payoff: payoff_unchecked(g, c, v),
                best_responses: best,
                unhappy,
            }
        })
        .collect();
    let overall = if any_unhappy {
        Stability::Unstable
    } else if all_singleton {
        Stability::StrictlyStable
    } else {
        Stability::StableNonStrict
    };
    Ok(StabilityReport { vertices, overall })
}

/// Overall label only, without building the per-vertex report.
pub fn stability(g: &Graph, c: &Coloring) -> Result<Stability> {
    c.check_for(g)?;
    let mut strict = true;
    for v in g.vertices() {
        let counts = color_counts(g, c, v);
        let own = counts[c.get(v) as usize - 1];
        for (i, &x) in counts.iter().enumerate() {
            if i as Color + 1 == c.get(v) {
                continue;
            }
            if x < own {
                return Ok(Stability::Unstable);
            }
            if x == own {
                strict = false;
            }
        }
    }
    Ok(if strict {
        Stability::StrictlyStable
    } else {
        Stability::StableNonStrict
    })
}

/// Payoff a best-responding vertex is guaranteed by pigeonhole:
/// `ceil(outdeg * (k - 1) / k)`.
pub fn pigeonhole_payoff(out_degree: usize, k: Color) -> usize {
    let k = k as usize;
    (out_degree * (k - 1)).div_ceil(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(k: Color, cs: &[Color]) -> Coloring {
        Coloring::new(k, cs.to_vec()).unwrap()
    }

    fn triangle() -> Graph {
        Graph::complete(3, false).unwrap()
    }

    #[test]
    fn payoffs() {
        let k2 = Graph::complete(2, false).unwrap();
        assert_eq!(payoff(&k2, &col(2, &[1, 2]), 1), Ok(1));
        assert_eq!(payoff(&triangle(), &col(2, &[1, 1, 2]), 3), Ok(2));
        let dc = Graph::directed_cycle(3).unwrap();
        assert_eq!(payoff(&dc, &col(2, &[1, 1, 2]), 2), Ok(1));
        assert!(matches!(
            payoff(&k2, &col(2, &[1, 2]), 3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn welfare_and_potential() {
        let t = triangle();
        let c = col(2, &[1, 1, 2]);
        assert_eq!(social_welfare(&t, &c), Ok(4));
        assert_eq!(potential(&t, &c), Ok(2));
        assert_eq!(social_welfare(&t, &col(3, &[2, 2, 2])), Ok(0));
        assert_eq!(potential(&t, &col(3, &[2, 2, 2])), Ok(0));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(potential(&c4, &col(2, &[1, 2, 1, 2])), Ok(4));
        let dc = Graph::directed_cycle(3).unwrap();
        assert_eq!(potential(&dc, &col(2, &[1, 2, 1])), Err(Error::DirectedUnsupported));
    }

    #[test]
    fn best_responses() {
        let p = Graph::path(3);
        assert_eq!(best_response_set(&p, &col(2, &[1, 2, 1]), 2), Ok(vec![2]));
        assert_eq!(best_response_set(&triangle(), &col(2, &[1, 1, 2]), 1), Ok(vec![1, 2]));
        let iso = Graph::empty(1, false);
        assert_eq!(best_response_set(&iso, &col(3, &[2]), 1), Ok(vec![1, 2, 3]));
    }

    #[test]
    fn unhappiness() {
        let k2 = Graph::complete(2, false).unwrap();
        assert_eq!(is_unhappy(&k2, &col(2, &[1, 1]), 1), Ok(true));
        assert_eq!(is_unhappy(&triangle(), &col(2, &[1, 1, 2]), 1), Ok(false));
        assert_eq!(is_unhappy(&Graph::empty(1, false), &col(2, &[1]), 1), Ok(false));
    }

    #[test]
    fn classification() {
        let p = Graph::path(3);
        let c = col(2, &[1, 2, 1]);
        assert_eq!(classify(&p, &c).unwrap().overall, Stability::StrictlyStable);
        assert_eq!(
            classify(&triangle(), &col(2, &[1, 1, 2])).unwrap().overall,
            Stability::StableNonStrict
        );
        let k2 = Graph::complete(2, false).unwrap();
        let r = classify(&k2, &col(2, &[1, 1])).unwrap();
        assert_eq!(r.overall, Stability::Unstable);
        assert_eq!(r.unhappy(), vec![1, 2]);
        assert!(classify(&k2, &col(2, &[1, 1, 1])).is_err());
    }

    #[test]
    fn isolated_vertex_never_strict() {
        let g = Graph::empty(1, false);
        for k in 2..5 {
            assert_eq!(stability(&g, &col(k, &[1])).unwrap(), Stability::StableNonStrict);
        }
    }

    #[test]
    fn pigeonhole() {
        assert_eq!(pigeonhole_payoff(0, 2), 0);
        assert_eq!(pigeonhole_payoff(3, 2), 2);
        assert_eq!(pigeonhole_payoff(4, 3), 3);
        assert_eq!(pigeonhole_payoff(5, 5), 4);
    }
}
