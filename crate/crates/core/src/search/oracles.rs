//! Brute-force deciders for the source problems of the reductions. They
//! share no code with the equilibrium search so they can serve as
//! independent witnesses.

use super::cnf::Cnf;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SAT_VARS: usize = 24;
pub const MAX_PARTITION_ORDER: usize = 24;

/// First satisfying assignment in binary counting order (variable 1 is the
/// lowest bit), or `None`.
pub fn sat_brute_force(f: &Cnf) -> Result<Option<Vec<bool>>> {
    if f.vars() > MAX_SAT_VARS {
        return Err(Error::TooManyVariables {
            vars: f.vars(),
            max: MAX_SAT_VARS,
        });
    }
    let mut assignment = vec![false; f.vars()];
    for mask in 0u32..(1 << f.vars()) {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        if f.eval(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// A proper `k`-coloring if one exists. Plain backtracking in
/// descending-degree order; a vertex may open at most one new color.
pub fn proper_colorable(g: &Graph, k: Color) -> Result<Option<Coloring>> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    let n = g.n();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.out_degree(v)), v));
    let mut colors = vec![0 as Color; n + 1];

    fn go(g: &Graph, k: Color, order: &[usize], i: usize, used: Color, colors: &mut [Color]) -> bool {
        let Some(&v) = order.get(i) else {
            return true;
        };
        for c in 1..=k.min(used + 1) {
            if g.out_neighbors(v).iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if go(g, k, order, i + 1, used.max(c), colors) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }

    if go(g, k, &order, 0, 0, &mut colors) {
        Ok(Some(Coloring::new(k.max(1), colors[1..].to_vec())?))
    } else {
        Ok(None)
    }
}

/// A balanced bipartition in which every vertex has at least as many
/// neighbors across as on its own side. `true` marks the side not holding
/// vertex 1. Exhaustive over all balanced splits.
pub fn balanced_unfriendly_exists(g: &Graph) -> Result<Option<Vec<bool>>> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n > MAX_PARTITION_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_PARTITION_ORDER,
        });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let side = |mask: u32, v: usize| mask >> (v - 1) & 1 == 1;
    // vertex 1 stays on side 0; the mirror image covers the rest
    for mask in 0u32..(1 << (n - 1)) {
        let mask = mask << 1;
        if mask.count_ones() as usize != n / 2 {
            continue;
        }
        let ok = g.vertices().all(|v| {
            let (mut same, mut cross) = (0, 0);
            for &w in g.out_neighbors(v) {
                if side(mask, v) == side(mask, w) {
                    same += 1;
                } else {
                    cross += 1;
                }
            }
            cross >= same
        });
        if ok {
            return Ok(Some(g.vertices().map(|v| side(mask, v)).collect()));
        }
    }
    Ok(None)
}

/// Maximum number of edges crossing a bipartition, by enumerating cuts.
pub fn max_cut(g: &Graph) -> Result<usize> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    let n = g.n();
    if n > MAX_PARTITION_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_PARTITION_ORDER,
        });
    }
    let edges = g.edges();
    let best = (0u32..(1 << n.saturating_sub(1)))
        .map(|mask| {
            edges
                .iter()
                .filter(|&&(a, b)| (mask >> (a - 1) & 1) != (mask >> (b - 1) & 1))
                .count()
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sat() {
        let single = Cnf::from_signed(3, &[[1, 2, -3]]).unwrap();
        assert!(sat_brute_force(&single).unwrap().is_some());
        let contradiction = Cnf::from_signed(1, &[[1, 1, 1], [-1, -1, -1]]).unwrap();
        assert_eq!(sat_brute_force(&contradiction).unwrap(), None);
        let mut all = Vec::new();
        for mask in 0..8 {
            let s = |i: i64| if mask >> (i - 1) & 1 == 1 { -i } else { i };
            all.push([s(1), s(2), s(3)]);
        }
        let full = Cnf::from_signed(3, &all).unwrap();
        assert_eq!(sat_brute_force(&full).unwrap(), None);
        let wide = Cnf::new(25, vec![]).unwrap();
        assert!(matches!(sat_brute_force(&wide), Err(Error::TooManyVariables { .. })));
    }

    #[test]
    fn coloring() {
        assert!(proper_colorable(&Graph::complete(3, false).unwrap(), 3)
            .unwrap()
            .is_some());
        assert_eq!(proper_colorable(&Graph::complete(4, false).unwrap(), 3).unwrap(), None);
        assert_eq!(proper_colorable(&Graph::cycle(5).unwrap(), 2).unwrap(), None);
        assert_eq!(
            proper_colorable(&Graph::directed_cycle(3).unwrap(), 3),
            Err(Error::DirectedUnsupported)
        );
    }

    #[test]
    fn balanced_unfriendly() {
        assert!(balanced_unfriendly_exists(&Graph::complete(4, false).unwrap())
            .unwrap()
            .is_some());
        assert_eq!(balanced_unfriendly_exists(&Graph::star(3)).unwrap(), None);
        assert_eq!(
            balanced_unfriendly_exists(&Graph::complete(2, false).unwrap()).unwrap(),
            Some(vec![false, true])
        );
        assert_eq!(balanced_unfriendly_exists(&Graph::path(3)), Err(Error::OddOrder(3)));
    }

    #[test]
    fn cuts() {
        assert_eq!(max_cut(&Graph::complete(3, false).unwrap()), Ok(2));
        assert_eq!(max_cut(&Graph::cycle(4).unwrap()), Ok(4));
        assert_eq!(max_cut(&Graph::complete(4, false).unwrap()), Ok(4));
    }
}
