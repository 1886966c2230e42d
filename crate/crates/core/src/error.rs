use thiserror::Error;

use crate::matroid::RankViolation;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set of {size} elements exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("rank table is not a matroid: {0}")]
    NotAMatroid(RankViolation),
    #[error("multiplicity of {set} is not positive")]
    NonpositiveMultiplicity { set: Subset },
    #[error("the two matroids do not share an underlying matroid")]
    UnderlyingMatroidMismatch,
    #[error("rank {rank} exceeds ground set size {size}")]
    RankExceedsSize { rank: usize, size: usize },
    #[error("column {column} has height {found}, expected {expected}")]
    HeightMismatch {
        column: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge} has endpoint {endpoint} but the graph has {vertices} vertices")]
    EndpointOutOfRange {
        edge: usize,
        endpoint: usize,
        vertices: usize,
    },
    #[error("{found} element labels given for {expected} elements")]
    LabelCount { expected: usize, found: usize },
}
