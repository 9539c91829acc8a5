//! Deterministic graph families.
//!
//! Random graphs use ChaCha8 (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64`. Candidate pairs are visited in
//! lexicographic order `(1,2), (1,3), ..., (n-1,n)` (all ordered pairs
//! `(a,b)`, `a != b`, for digraphs), one `next_u64` draw per pair, and the
//! pair is kept when `draw >> 11 < floor(p * 2^53)`.

use itertools::Itertools;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn threshold(p: f64) -> Result<u64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    Ok((p * (1u64 << 53) as f64) as u64)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let t = threshold(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.next_u64() >> 11 < t {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, false, edges)
}

/// Random digraph: each ordered pair is an arc with probability `p`.
pub fn random_digraph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let t = threshold(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for a in 1..=n {
        for b in (1..=n).filter(|&b| b != a) {
            if rng.next_u64() >> 11 < t {
                arcs.push((a, b));
            }
        }
    }
    Graph::new(n, true, arcs)
}

/// One representative per isomorphism class of undirected graphs on `n`
/// vertices, optionally connected only. Brute-force canonical forms, so keep
/// `n <= 7`.
pub fn all_graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n <= 7, "isomorphism classes are enumerated by brute force");
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    // relabeled bit positions for every permutation
    let perms: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|perm| pairs.iter().map(|&(a, b)| index(perm[a], perm[b])).collect())
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|map| {
                map.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap_or(0);
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(a, b))| (a + 1, b + 1));
            Graph::new(n, false, edges).expect("pairs are distinct")
        })
        .filter(|g| !connected_only || is_connected(g))
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n() + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &w in g.out_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_reproducible() {
        let a = random_graph(10, 0.5, 7).unwrap();
        let b = random_graph(10, 0.5, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_graph(10, 0.5, 8).unwrap());
        assert_eq!(random_graph(6, 0.0, 1).unwrap().m(), 0);
        assert_eq!(random_graph(6, 1.0, 1).unwrap().m(), 15);
        assert!(random_graph(3, 1.5, 0).is_err());
        assert_eq!(random_digraph(4, 1.0, 3).unwrap().m(), 12);
    }

    #[test]
    fn isomorphism_class_counts() {
        // OEIS A000088 and A001349
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n, false).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| all_graphs(n, true).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }
}
