use super::{ReductionOutput, ReductionParams};
use crate::coloring::Color;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::roles::VertexRoleMap;

/// Proper `k`-coloring to strictly stable `k`-coloring, `k >= 3`.
///
/// Each edge `{u, v}` receives its own `K_{k-2}` joined to both endpoints,
/// so `u`, `v` and the copy form a `K_k`. Each isolated vertex receives a
/// `K_{k-1}` joined to it, since an isolated vertex can never be strictly
/// stable.
pub fn reduce_kcolor_to_strict(g: &Graph, k: Color) -> Result<ReductionOutput> {
    if g.is_directed() {
        return Err(Error::DirectedUnsupported);
    }
    if k < 3 {
        return Err(Error::TooFewColors { k, min: 3 });
    }
    let q = k as usize;
    let mut b = GraphBuilder::new(false);
    let mut roles = VertexRoleMap::new();
    for v in g.vertices() {
        b.add_vertex();
        roles.push(format!("original:{v}"));
    }
    for (u, v) in g.edges() {
        b.arc(u, v);
        let copy: Vec<_> = (1..=q - 2)
            .map(|i| {
                roles.push(format!("edge:{u}-{v}:{i}"));
                b.add_vertex()
            })
            .collect();
        b.clique(&copy);
        for &x in &copy {
            b.arc(u, x);
            b.arc(v, x);
        }
    }
    for v in g.isolated_vertices() {
        let copy: Vec<_> = (1..q)
            .map(|i| {
                roles.push(format!("isolated:{v}:{i}"));
                b.add_vertex()
            })
            .collect();
        b.clique(&copy);
        for &x in &copy {
            b.arc(v, x);
        }
    }
    Ok(ReductionOutput {
        graph: b.build()?,
        roles,
        params: ReductionParams {
            construction: "kcolor-strict",
            k,
            copies: None,
            gadget_version: None,
        },
    })
}
