use crate::graph::{Family, HomClass};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("duplicate vertex {vertex} in subgraph selection")]
    DuplicateVertex { vertex: usize },
    #[error("family {family} requires n >= {min}, got n = {n}")]
    FamilySize { family: Family, min: usize, n: usize },
    #[error("cycle(3) is a complete graph; use complete(3)")]
    CycleIsTriangle,
    #[error("target size m must be at least 3, got m = {m}")]
    TargetSize { m: usize },
    #[error("bad-term index k must be at least 1")]
    ZeroK,
    #[error("level graphs are indexed from 1")]
    LevelIndex,
    #[error("class {class} has no closed form for family {family}; only class all is available")]
    ClassNotCovered { family: Family, class: HomClass },
}
