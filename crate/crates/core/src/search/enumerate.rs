//! Exhaustive enumeration of the `k^n` colorings.
//!
//! Colorings are visited as base-`k` numerals with vertex 1 most
//! significant. The space is cut into chunks by a fixed prefix of the first
//! vertices; chunks run on the rayon pool and their results are merged in
//! prefix order, so every output is identical to a sequential scan.

use num_rational::Ratio as NumRatio;
use rayon::prelude::*;

use super::Evaluator;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::game::{Mode, Stability};
use crate::graph::Graph;
use crate::Ratio;

/// Default cap on colorings examined by one exhaustive call.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `k^n`, saturating.
pub fn space_size(n: usize, k: Color) -> u128 {
    u32::try_from(n)
        .ok()
        .and_then(|n| (k as u128).checked_pow(n))
        .unwrap_or(u128::MAX)
}

fn check_budget(n: usize, k: Color, budget: u128) -> Result<()> {
    if k == 0 || k > u8::MAX as Color {
        return Err(Error::InvalidParameter(format!("k={k} outside 1..=255")));
    }
    let required = space_size(n, k);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Runs `visit` over every coloring of one chunk, in order.
fn scan_chunk<F>(n: usize, k: usize, prefix_len: usize, chunk: usize, mut visit: F)
where
    F: FnMut(&[u8]),
{
    let mut colors = vec![0u8; n];
    let mut rest = chunk;
    for i in (0..prefix_len).rev() {
        colors[i] = (rest % k) as u8;
        rest /= k;
    }
    if n == prefix_len {
        visit(&colors);
        return;
    }
    loop {
        visit(&colors);
        // odometer over the suffix, last vertex fastest
        let mut i = n;
        loop {
            if i == prefix_len {
                return;
            }
            i -= 1;
            colors[i] += 1;
            if (colors[i] as usize) < k {
                break;
            }
            colors[i] = 0;
        }
    }
}

fn prefix_len(n: usize, k: usize) -> usize {
    let mut len = 0;
    let mut chunks = 1usize;
    while len < n && chunks < 256 {
        chunks *= k;
        len += 1;
    }
    len
}

/// Folds each chunk with `fold`, returning per-chunk results in prefix order.
fn par_chunks<T, F>(n: usize, k: usize, fold: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, usize) -> T + Sync,
{
    let p = prefix_len(n, k);
    let chunks = k.pow(p as u32);
    (0..chunks).into_par_iter().map(|c| fold(p, c)).collect()
}

/// Every coloring whose label satisfies `mode`, in lexicographic order.
pub fn enumerate_stable(g: &Graph, k: Color, mode: Mode, budget: u128) -> Result<Vec<Coloring>> {
    check_budget(g.n(), k, budget)?;
    let eval = Evaluator::new(g, k);
    let n = g.n();
    let ku = k as usize;
    let strict = mode == Mode::Strict;
    let parts = par_chunks(n, ku, |p, chunk| {
        let mut counts = vec![0u32; ku];
        let mut found = Vec::new();
        scan_chunk(n, ku, p, chunk, |colors| {
            if mode.accepts(eval.stability(colors, &mut counts, strict)) {
                found.push(Coloring::from_zero_based(k, colors));
            }
        });
        found
    });
    Ok(parts.into_iter().flatten().collect())
}

/// One representative (the first-appearance canonical form) per
/// color-permutation orbit.
pub fn enumerate_stable_orbits(g: &Graph, k: Color, mode: Mode, budget: u128) -> Result<Vec<Coloring>> {
    Ok(enumerate_stable(g, k, mode, budget)?
        .into_iter()
        .filter(|c| *c == c.canonical())
        .collect())
}

/// Maximum social welfare over all colorings, with the lexicographically
/// first coloring attaining it.
pub fn max_welfare(g: &Graph, k: Color, budget: u128) -> Result<(usize, Coloring)> {
    check_budget(g.n(), k, budget)?;
    let eval = Evaluator::new(g, k);
    let n = g.n();
    let ku = k as usize;
    let parts = par_chunks(n, ku, |p, chunk| {
        let mut best: Option<(usize, Vec<u8>)> = None;
        scan_chunk(n, ku, p, chunk, |colors| {
            let w = eval.welfare(colors);
            if best.as_ref().is_none_or(|(b, _)| w > *b) {
                best = Some((w, colors.to_vec()));
            }
        });
        best.expect("every chunk holds at least one coloring")
    });
    let (w, colors) = parts
        .into_iter()
        .reduce(|a, b| if b.0 > a.0 { b } else { a })
        .expect("at least one chunk");
    Ok((w, Coloring::from_zero_based(k, &colors)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoaResult {
    pub max_welfare: usize,
    pub min_stable_welfare: usize,
    /// `max_welfare / min_stable_welfare`, reduced.
    pub ratio: Ratio,
    /// First coloring attaining `max_welfare`.
    pub best: Coloring,
    /// First stable coloring attaining `min_stable_welfare`.
    pub worst: Coloring,
    /// Size of the stable set.
    pub equilibria: usize,
}

#[derive(Clone)]
struct PoaChunk {
    best: (usize, Vec<u8>),
    worst: Option<(usize, Vec<u8>)>,
    equilibria: usize,
}

/// Price of anarchy over the full stable set, as an exact fraction.
pub fn price_of_anarchy(g: &Graph, k: Color, budget: u128) -> Result<PoaResult> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    check_budget(g.n(), k, budget)?;
    let eval = Evaluator::new(g, k);
    let n = g.n();
    let ku = k as usize;
    let parts = par_chunks(n, ku, |p, chunk| {
        let mut counts = vec![0u32; ku];
        let mut acc: Option<PoaChunk> = None;
        scan_chunk(n, ku, p, chunk, |colors| {
            let w = eval.welfare(colors);
            let stable = eval.stability(colors, &mut counts, false) != Stability::Unstable;
            let acc = acc.get_or_insert_with(|| PoaChunk {
                best: (w, colors.to_vec()),
                worst: None,
                equilibria: 0,
            });
            if w > acc.best.0 {
                acc.best = (w, colors.to_vec());
            }
            if stable {
                acc.equilibria += 1;
                if acc.worst.as_ref().is_none_or(|(x, _)| w < *x) {
                    acc.worst = Some((w, colors.to_vec()));
                }
            }
        });
        acc.expect("every chunk holds at least one coloring")
    });
    let merged = parts
        .into_iter()
        .reduce(|a, b| PoaChunk {
            best: if b.best.0 > a.best.0 { b.best } else { a.best },
            worst: match (a.worst, b.worst) {
                (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
                (x, y) => x.or(y),
            },
            equilibria: a.equilibria + b.equilibria,
        })
        .expect("at least one chunk");
    let (min_w, worst) = merged.worst.ok_or(Error::NoEquilibrium)?;
    // Every stable vertex keeps ceil(outdeg (k-1)/k) >= 1 once it has an
    // out-neighbor, so a graph with an arc cannot have a zero-welfare
    // equilibrium.
    assert!(min_w > 0, "stable coloring with zero welfare on a graph with arcs");
    Ok(PoaResult {
        max_welfare: merged.best.0,
        min_stable_welfare: min_w,
        ratio: NumRatio::new(merged.best.0 as u64, min_w as u64),
        best: Coloring::from_zero_based(k, &merged.best.1),
        worst: Coloring::from_zero_based(k, &worst),
        equilibria: merged.equilibria,
    })
}
