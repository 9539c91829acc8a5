//! Complete backtracking search for a single equilibrium.
//!
//! Each vertex carries a domain of still-possible colors (a bitmask); a
//! vertex is fixed once its domain is a singleton. Propagation enforces, for
//! every vertex `v` and every pair of colors `c` (its own) and `m` (an
//! alternative), that the final number of `m`-colored out-neighbors can still
//! reach the number of `c`-colored ones (strictly exceed it in strict mode).
//! For a fixed vertex this prunes its unfixed out-neighbors; for an unfixed
//! vertex it prunes its own domain. When every out-neighbor is fixed the
//! rules are exact, so leaves need no further check.

use crate::coloring::{Color, Coloring};
use crate::game::{self, Mode};
use crate::graph::Graph;

struct Solver {
    k: usize,
    delta: usize,
    out: Vec<Vec<usize>>,
    preds: Vec<Vec<usize>>,
    order: Vec<usize>,
}

type Domains = Vec<u32>;

fn fixed(d: u32) -> bool {
    d.count_ones() == 1
}

impl Solver {
    fn new(g: &Graph, k: Color, mode: Mode) -> Self {
        let out = g.zero_based();
        let preds: Vec<Vec<usize>> = g
            .in_neighbors()
            .into_iter()
            .map(|p| p.into_iter().map(|v| v - 1).collect())
            .collect();
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(out[v].len() + preds[v].len()), v));
        Solver {
            k: k as usize,
            delta: usize::from(mode == Mode::Strict),
            out,
            preds,
            order,
        }
    }

    /// Applies the rules at `v`. Pushes every vertex whose domain changed
    /// onto `changed`. Returns false on a contradiction.
    fn revise(&self, v: usize, dom: &mut Domains, changed: &mut Vec<usize>) -> bool {
        let k = self.k;
        let mut cnt = [0usize; 32];
        let mut possible = [0usize; 32];
        for &w in &self.out[v] {
            let d = dom[w];
            if fixed(d) {
                cnt[d.trailing_zeros() as usize] += 1;
            } else {
                for (m, p) in possible.iter_mut().enumerate().take(k) {
                    if d >> m & 1 == 1 {
                        *p += 1;
                    }
                }
            }
        }
        let dv = dom[v];
        if fixed(dv) {
            let c = dv.trailing_zeros() as usize;
            let need = cnt[c] + self.delta;
            for m in (0..k).filter(|&m| m != c) {
                let reach = cnt[m] + possible[m];
                if reach < need {
                    return false;
                }
                // tight enough that unfixed neighbors are constrained
                if reach > need + 1 {
                    continue;
                }
                for &w in &self.out[v] {
                    let d = dom[w];
                    if fixed(d) {
                        continue;
                    }
                    let has_m = (d >> m & 1) as usize;
                    let mut nd = d;
                    if d >> c & 1 == 1 && reach - has_m < need + 1 {
                        nd &= !(1 << c);
                    }
                    if has_m == 1 && reach - 1 < need {
                        nd &= 1 << m;
                    }
                    if nd != d {
                        if nd == 0 {
                            return false;
                        }
                        dom[w] = nd;
                        changed.push(w);
                    }
                }
            }
            true
        } else {
            let mut nd = dv;
            for c in (0..k).filter(|&c| dv >> c & 1 == 1) {
                let need = cnt[c] + self.delta;
                if (0..k).any(|m| m != c && cnt[m] + possible[m] < need) {
                    nd &= !(1 << c);
                }
            }
            if nd != dv {
                if nd == 0 {
                    return false;
                }
                dom[v] = nd;
                changed.push(v);
            }
            true
        }
    }

    fn propagate(&self, dom: &mut Domains, mut queue: Vec<usize>) -> bool {
        let mut queued = vec![false; dom.len()];
        for &v in &queue {
            queued[v] = true;
        }
        let mut changed = Vec::new();
        while let Some(v) = queue.pop() {
            queued[v] = false;
            if !self.revise(v, dom, &mut changed) {
                return false;
            }
            for w in changed.drain(..) {
                for &u in self.preds[w].iter().chain(std::iter::once(&w)) {
                    if !queued[u] {
                        queued[u] = true;
                        queue.push(u);
                    }
                }
            }
        }
        true
    }

    fn solve(&self, dom: &mut Domains, depth: usize) -> bool {
        let Some(&v) = self.order.iter().find(|&&v| !fixed(dom[v])) else {
            return true;
        };
        let d = dom[v];
        for c in (0..self.k).filter(|&c| d >> c & 1 == 1) {
            // at the root every color is interchangeable
            if depth == 0 && c > 0 {
                break;
            }
            let mut next = dom.clone();
            next[v] = 1 << c;
            let mut queue = self.preds[v].clone();
            queue.push(v);
            if self.propagate(&mut next, queue) && self.solve(&mut next, depth + 1) {
                *dom = next;
                return true;
            }
        }
        false
    }
}

/// Finds a coloring meeting `mode`, or `None` when none exists.
///
/// # Panics
/// For `k > 32`, which the bitmask domains cannot hold.
pub fn search_stable(g: &Graph, k: Color, mode: Mode) -> Option<Coloring> {
    assert!((1..=32).contains(&k), "search supports 1..=32 colors");
    let solver = Solver::new(g, k, mode);
    let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut dom = vec![full; g.n()];
    let all: Vec<usize> = (0..g.n()).collect();
    if !solver.propagate(&mut dom, all) || !solver.solve(&mut dom, 0) {
        return None;
    }
    let colors: Vec<u8> = dom.iter().map(|d| d.trailing_zeros() as u8).collect();
    let c = Coloring::from_zero_based(k, &colors);
    debug_assert!(mode.accepts(game::stability(g, &c).unwrap()));
    Some(c)
}
