use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {index}: loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },

    #[error("edge {index}: duplicate pair ({u},{v})")]
    DuplicateEdge { index: usize, u: usize, v: usize },

    #[error("coloring has {colors} entries but the graph has {edges} edges")]
    EdgeCountMismatch { colors: usize, edges: usize },

    #[error("edge index {index} out of range for a graph with {edges} edges")]
    EdgeIndexOutOfRange { index: usize, edges: usize },

    #[error("edge colors must be >= 1 (entry {index} is 0)")]
    ZeroColor { index: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid parameter {name}={value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: u64,
        reason: &'static str,
    },

    #[error("construction self-check failed: {0}")]
    SelfCheck(String),

    #[error("invalid compression request: {0}")]
    InvalidCompression(String),

    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("graph has {edges} edges; brute force is limited to {limit}")]
    BruteForceLimit { edges: usize, limit: usize },

    #[error("palette of {0} colors exceeds the solver limit of 128")]
    PaletteTooLarge(u32),

    #[error("deficiency criticality is undefined for graphs with deficiency 0")]
    CriticalityUndefined,

    #[error("node budget exhausted")]
    BudgetExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
