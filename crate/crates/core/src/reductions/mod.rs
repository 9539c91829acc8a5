//! Constructions: the tight price-of-anarchy family, the hardness
//! reductions for strict and directed equilibria, the connector gadgets they
//! are assembled from, and the coordination proxy transform.
//!
//! Every constructor is deterministic: vertex ids and role labels depend only
//! on the input and the parameters.

pub mod directed;
pub mod gadgets;
pub mod kcolor;
pub mod poa_tight;
pub mod proxy;
pub mod sat;

pub use directed::{reduce_bup_to_directed2, reduce_directed2_to_directedk, undirected_to_directed, Copies};
pub use gadgets::{clause_gadget, negation_gadget, persistence_gadget, Gadget, GadgetVersion};
pub use kcolor::reduce_kcolor_to_strict;
pub use poa_tight::poa_tight_instance;
pub use proxy::{coordination_proxy_transform, ArcKind, MixedGameSpec};
pub use sat::{extract_assignment, formula_from_roles, reduce_3sat_to_strict2};

use crate::coloring::Color;
use crate::graph::Graph;
use crate::io;
use crate::roles::VertexRoleMap;

/// Parameters that, with the input, fully determine a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionParams {
    pub construction: &'static str,
    pub k: Color,
    pub copies: Option<usize>,
    pub gadget_version: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub roles: VertexRoleMap,
    pub params: ReductionParams,
}

impl ReductionOutput {
    /// Graph file text.
    pub fn graph_file(&self) -> String {
        io::write_graph(&self.graph)
    }

    /// Role sidecar text.
    pub fn roles_file(&self) -> String {
        io::write_roles(&self.roles)
    }
}
