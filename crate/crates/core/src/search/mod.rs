//! Searching the coloring space.
//!
//! [`enumerate`] walks all `k^n` colorings (in parallel, merged back in
//! lexicographic order), [`backtrack`] finds a single equilibrium with
//! propagation, and [`oracles`] holds the independent brute-force deciders
//! used to check the hardness reductions.

pub mod backtrack;
pub mod cnf;
pub mod enumerate;
pub mod oracles;

pub use backtrack::search_stable;
pub use cnf::{Cnf, Literal};
pub use enumerate::{
    enumerate_stable, enumerate_stable_orbits, max_welfare, price_of_anarchy, space_size, PoaResult, DEFAULT_BUDGET,
};
pub use oracles::{balanced_unfriendly_exists, max_cut, proper_colorable, sat_brute_force};

use crate::game::Stability;
use crate::graph::Graph;

/// Zero-based adjacency plus scratch-free checks over `u8` color vectors.
#[derive(Debug, Clone)]
pub(crate) struct Evaluator {
    k: usize,
    adj: Vec<Vec<usize>>,
}

impl Evaluator {
    pub fn new(g: &Graph, k: u32) -> Self {
        Evaluator {
            k: k as usize,
            adj: g.zero_based(),
        }
    }

    /// Classifies `colors` (0-based). Returns early on the first unhappy
    /// vertex; with `need_strict` it also stops at the first tie.
    pub fn stability(&self, colors: &[u8], counts: &mut [u32], need_strict: bool) -> Stability {
        let mut strict = true;
        for (v, nbrs) in self.adj.iter().enumerate() {
            counts[..self.k].fill(0);
            for &w in nbrs {
                counts[colors[w] as usize] += 1;
            }
            let own_color = colors[v] as usize;
            let own = counts[own_color];
            for (c, &x) in counts[..self.k].iter().enumerate() {
                if c == own_color {
                    continue;
                }
                if x < own {
                    return Stability::Unstable;
                }
                if x == own {
                    if need_strict {
                        return Stability::StableNonStrict;
                    }
                    strict = false;
                }
            }
        }
        if strict {
            Stability::StrictlyStable
        } else {
            Stability::StableNonStrict
        }
    }

    pub fn welfare(&self, colors: &[u8]) -> usize {
        self.adj
            .iter()
            .enumerate()
            .map(|(v, nbrs)| nbrs.iter().filter(|&&w| colors[w] != colors[v]).count())
            .sum()
    }
}
