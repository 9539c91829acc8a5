use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Two copies of `K_k` joined by the matching `i -- i + k`.
///
/// Returns the graph, the worst stable coloring (both cliques colored
/// `1..k` in order, every vertex seeing each color once) and an optimal one
/// (second clique shifted by one color, so every edge is proper).
pub fn poa_tight_instance(k: Color) -> Result<(Graph, Coloring, Coloring)> {
    if k < 2 {
        return Err(Error::TooFewColors { k, min: 2 });
    }
    let q = k as usize;
    let mut b = GraphBuilder::new(false);
    let left = b.add_vertices(q);
    let right = b.add_vertices(q);
    b.clique(&left);
    b.clique(&right);
    for (&l, &r) in left.iter().zip(&right) {
        b.arc(l, r);
    }
    let g = b.build()?;
    let worst: Vec<Color> = (1..=k).chain(1..=k).collect();
    let best: Vec<Color> = (1..=k).chain((2..=k).chain([1])).collect();
    Ok((g, Coloring::new(k, worst)?, Coloring::new(k, best)?))
}
