use thiserror::Error;

use crate::graph::{MAX_DIMENSION, MIN_DIMENSION};

pub type Result<T> = std::result::Result<T, CccError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CccError {
    #[error("dimension {0} out of range: n must lie in {MIN_DIMENSION}..={MAX_DIMENSION}")]
    DimensionOutOfRange(u32),

    #[error("invalid vertex for n={n}: {reason}")]
    InvalidVertex { n: u32, reason: String },

    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: String, v: String },

    #[error("vertex {0} given twice where an edge was expected")]
    SameVertex(String),

    /// A resource gate on an otherwise valid dimension (exhaustive modes, oracles).
    #[error("{operation} supports n <= {max}, got n={n}")]
    Gate {
        operation: &'static str,
        n: u32,
        max: u32,
    },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl CccError {
    /// True for errors caused by the dimension range or a resource gate.
    pub fn is_gate(&self) -> bool {
        matches!(
            self,
            CccError::DimensionOutOfRange(_) | CccError::Gate { .. }
        )
    }
}
