//! Edge-disjoint T-paths in inner Eulerian multigraphs: Menger flows, waves,
//! the Lovász–Cherkassky packing with a certificate, Mader duality and the
//! closure decomposition of maximum packings.

pub mod error;
pub mod multigraph;
pub mod path;

pub(crate) mod flow;
pub mod menger;
pub mod waves;
pub mod packing;
pub mod duality;
pub mod closure;
pub mod enumerate;
pub mod cli;

pub use error::{Error, Result};
pub use multigraph::{Cut, EdgeId, EdgeSet, Multigraph, TerminalSet, VertexId, VertexSet};
pub use path::{Path, PathSystem};
