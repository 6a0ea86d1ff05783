//! Proper orientations of triangle-free outerplanar graphs.
//!
//! The orienter builds proper orientations with maximum in-degree at most 3
//! for 2-connected inputs and at most 4 for bridgeless or tree-free inputs.
//! An exact branch-and-bound oracle computes the proper orientation number of
//! small graphs for cross-checking.

pub mod bench;
pub mod embed;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod orient;

pub use error::{EmbedError, GraphError, OracleError, OrientError, RealizeError};
pub use graph::{EdgeId, Graph, Orientation, PartialOrientation, Vertex};
