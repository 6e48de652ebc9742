//! Simultaneous metric and adjacency dimension of graph families, corona and
//! join products, and checkers for the closed-form results about them.
//!
//! Graphs have at most [`MAX_ORDER`] vertices, stored as `u64` adjacency rows.

pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod metric;
mod par;
pub mod products;
pub mod resolving;
pub mod verify;
pub mod vset;

/// Largest supported graph order.
pub const MAX_ORDER: usize = 64;

pub use error::{Error, Result};
pub use graph::{Graph, GraphFamily, StandardKind};
pub use metric::{Extent, MetricSelector};
pub use vset::VertexSet;

/// Whether this build can run searches on the rayon thread pool.
pub const fn parallel_available() -> bool {
    par::available()
}
