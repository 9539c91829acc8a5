//! Anti-coordination games on graphs.
//!
//! Every vertex picks one of `k` colors and earns one unit per out-neighbor
//! holding a different color. This crate evaluates payoffs and stability,
//! runs best-response dynamics, enumerates equilibria, computes the exact
//! price of anarchy, and builds the hardness-reduction gadgets together with
//! brute-force oracles that check them.
//!
//! Vertices and colors are 1-based throughout the public API.

pub mod coloring;
pub mod dynamics;
pub mod error;
pub mod game;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod roles;
pub mod search;

pub use coloring::{Color, Coloring};
pub use dynamics::{run_dynamics, DynamicsTrace, Init, Step};
pub use error::{Error, Result};
pub use game::{
    best_response_set, classify, is_unhappy, payoff, potential, social_welfare, Mode, Stability, StabilityReport,
};
pub use graph::{Graph, Vertex};
pub use reductions::ReductionOutput;
pub use roles::VertexRoleMap;
pub use search::{Cnf, Literal, PoaResult};

/// Exact ratio of welfare counts.
pub type Ratio = num_rational::Ratio<u64>;
