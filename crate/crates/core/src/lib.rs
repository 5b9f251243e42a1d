//! Density-sensitive (Δ+1)-edge-coloring.
//!
//! The building blocks are [`fan`] (primed fans and fan shifts), [`path`]
//! (maximal alternating paths and flips) and [`extend`], which combines the
//! two to color one more edge of a proper partial coloring. On top of them:
//!
//! * [`sequential`]: randomized single-edge coloring centered at the
//!   lower-degree endpoint, the iterated version, and a deterministic
//!   baseline;
//! * [`recursive`]: Euler-partition divide and conquer with weight-based
//!   pruning of the merged coloring.
//!
//! [`generators`] builds seeded benchmark graphs and [`oracles`] holds
//! brute-force checks the fast code is tested against.

pub mod coloring;
pub mod dsu;
pub mod extend;
pub mod fan;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod path;
pub mod recursive;
pub mod sequential;

use thiserror::Error;

pub use coloring::{
    verify_colors, verify_proper, Color, ColoringError, PartialColoring, ProperReport, UNCOLORED,
};
pub use graph::{read_edge_list, write_edge_list, EdgeId, Graph, GraphError, GraphStats, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanPathError {
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("alternating path is not maximal at vertex {vertex}")]
    NotMaximal { vertex: VertexId },
    #[error("path edge {edge} does not match the coloring")]
    PathMismatch { edge: EdgeId },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
