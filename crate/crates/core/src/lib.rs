//! Cube-connected cycles `CCC_n`: interval-with-ends shortest paths,
//! labeling automorphisms, distance-balance partitions and brute-force
//! oracles that cross-check all of it.

pub mod balance;
pub mod error;
pub mod graph;
pub mod iwe;
pub mod labeling;
pub mod oracle;
pub mod report;

pub use error::{CccError, Result};
pub use graph::{Dimension, Edge, EdgeKind, Vertex};
