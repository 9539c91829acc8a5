//! Best-response dynamics.
//!
//! While some vertex is unhappy, the lowest-indexed one switches to the
//! smallest color among those minimizing its same-colored out-neighbors. On
//! undirected graphs every switch raises the potential by at least one, so
//! the run ends after at most `m` switches. Directed graphs have no
//! potential and the run is capped.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::game;
use crate::graph::{Graph, Vertex};

/// Starting point of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Init {
    /// Every vertex colored 1.
    AllOne,
    /// Uniform colors drawn from ChaCha8 seeded with the given value.
    Random(u64),
    Given(Coloring),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub vertex: Vertex,
    pub old: Color,
    pub new: Color,
    /// Potential before and after; `None` on directed graphs.
    pub phi_before: Option<usize>,
    pub phi_after: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsTrace {
    pub initial: Coloring,
    pub steps: Vec<Step>,
    pub converged: bool,
    pub final_coloring: Coloring,
}

impl DynamicsTrace {
    /// One `s <vertex> <old> <new> <phi_before> <phi_after>` line per step.
    pub fn to_log(&self) -> String {
        let phi = |p: Option<usize>| p.map_or_else(|| "-".to_string(), |x| x.to_string());
        let mut out = String::new();
        for s in &self.steps {
            writeln!(
                out,
                "s {} {} {} {} {}",
                s.vertex,
                s.old,
                s.new,
                phi(s.phi_before),
                phi(s.phi_after)
            )
            .unwrap();
        }
        out
    }
}

/// Step cap applied to directed runs when none is given.
pub fn default_step_cap(n: usize, k: Color) -> usize {
    10 * n * k as usize
}

pub fn run_dynamics(g: &Graph, k: Color, init: Init, max_steps: Option<usize>) -> Result<DynamicsTrace> {
    if k < 2 {
        return Err(Error::TooFewColors { k, min: 2 });
    }
    let initial = match init {
        Init::AllOne => Coloring::uniform(g.n(), k),
        Init::Random(seed) => Coloring::random(g.n(), k, &mut ChaCha8Rng::seed_from_u64(seed)),
        Init::Given(c) => {
            if c.len() != g.n() {
                return Err(Error::InvalidInit(format!("length {} for {} vertices", c.len(), g.n())));
            }
            if c.k() != k {
                return Err(Error::InvalidInit(format!("coloring uses k={}, run uses k={k}", c.k())));
            }
            c
        }
    };
    let cap = match max_steps {
        Some(cap) => cap,
        None if g.is_directed() => default_step_cap(g.n(), k),
        None => usize::MAX,
    };

    let n = g.n();
    let ku = k as usize;
    let preds = g.in_neighbors();
    let mut colors = initial.clone();
    // counts[(v - 1) * k + c - 1] = out-neighbors of v with color c
    let mut counts = vec![0usize; n * ku];
    for v in g.vertices() {
        for &w in g.out_neighbors(v) {
            counts[(v - 1) * ku + colors.get(w) as usize - 1] += 1;
        }
    }
    let unhappy_at = |counts: &[usize], colors: &Coloring, v: Vertex| {
        let row = &counts[(v - 1) * ku..v * ku];
        let min = *row.iter().min().unwrap();
        row[colors.get(v) as usize - 1] > min
    };
    let mut unhappy: BTreeSet<Vertex> = g.vertices().filter(|&v| unhappy_at(&counts, &colors, v)).collect();

    let mut phi = if g.is_directed() {
        None
    } else {
        Some(game::potential(g, &colors)?)
    };
    let mut steps = Vec::new();
    while let Some(&v) = unhappy.iter().next() {
        if steps.len() >= cap {
            break;
        }
        let row = &counts[(v - 1) * ku..v * ku];
        let min = *row.iter().min().unwrap();
        let new = row.iter().position(|&x| x == min).unwrap() as Color + 1;
        let old = colors.get(v);
        let phi_after = phi.map(|p| p + row[old as usize - 1] - row[new as usize - 1]);
        steps.push(Step {
            vertex: v,
            old,
            new,
            phi_before: phi,
            phi_after,
        });
        phi = phi_after;
        colors.set(v, new);
        unhappy.remove(&v);
        for &u in &preds[v - 1] {
            counts[(u - 1) * ku + old as usize - 1] -= 1;
            counts[(u - 1) * ku + new as usize - 1] += 1;
            if unhappy_at(&counts, &colors, u) {
                unhappy.insert(u);
            } else {
                unhappy.remove(&u);
            }
        }
    }
    Ok(DynamicsTrace {
        initial,
        converged: unhappy.is_empty(),
        steps,
        final_coloring: colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{classify, Stability};

    #[test]
    fn single_forced_move() {
        let k2 = Graph::complete(2, false).unwrap();
        let t = run_dynamics(&k2, 2, Init::AllOne, None).unwrap();
        assert!(t.converged);
        assert_eq!(
            t.steps,
            vec![Step {
                vertex: 1,
                old: 1,
                new: 2,
                phi_before: Some(0),
                phi_after: Some(1)
            }]
        );
        assert_eq!(t.final_coloring.as_slice(), &[2, 1]);
        assert_eq!(t.to_log(), "s 1 1 2 0 1\n");
    }

    #[test]
    fn proper_coloring_is_a_fixed_point() {
        let c4 = Graph::cycle(4).unwrap();
        let init = Coloring::new(2, vec![1, 2, 1, 2]).unwrap();
        let t = run_dynamics(&c4, 2, Init::Given(init.clone()), None).unwrap();
        assert!(t.converged);
        assert!(t.steps.is_empty());
        assert_eq!(t.final_coloring, init);
    }

    #[test]
    fn directed_three_cycle_never_settles() {
        let dc = Graph::directed_cycle(3).unwrap();
        for seed in 0..8 {
            let t = run_dynamics(&dc, 2, Init::Random(seed), Some(100)).unwrap();
            assert!(!t.converged);
            assert_eq!(t.steps.len(), 100);
            assert!(t.steps.iter().all(|s| s.phi_before.is_none()));
        }
        let t = run_dynamics(&dc, 2, Init::AllOne, None).unwrap();
        assert_eq!(t.steps.len(), default_step_cap(3, 2));
        assert!(t.to_log().starts_with("s 1 1 2 - -\n"));
    }

    #[test]
    fn bad_init() {
        let k2 = Graph::complete(2, false).unwrap();
        let short = Coloring::uniform(1, 2);
        assert!(matches!(
            run_dynamics(&k2, 2, Init::Given(short), None),
            Err(Error::InvalidInit(_))
        ));
        assert!(matches!(
            run_dynamics(&k2, 1, Init::AllOne, None),
            Err(Error::TooFewColors { .. })
        ));
    }

    #[test]
    fn converged_runs_are_stable() {
        let g = Graph::complete(5, false).unwrap();
        for k in 2..5 {
            let t = run_dynamics(&g, k, Init::AllOne, None).unwrap();
            assert!(t.converged);
            assert_ne!(classify(&g, &t.final_coloring).unwrap().overall, Stability::Unstable);
        }
    }
}
