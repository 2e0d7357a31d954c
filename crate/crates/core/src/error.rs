use crate::Edge;

/// Input errors shared across the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("left vertex {index} out of range (u_count = {bound})")]
    LeftIndexOutOfRange { index: usize, bound: usize },
    #[error("right vertex {index} out of range (v_count = {bound})")]
    RightIndexOutOfRange { index: usize, bound: usize },
    #[error("edge ({}, {}) is not an edge of the graph", edge.0, edge.1)]
    EdgeNotInGraph { edge: Edge },
    #[error("vertex {index} out of range (n = {bound})")]
    VertexOutOfRange { index: usize, bound: usize },
    #[error("variable index {index} out of range (var_count = {bound})")]
    VariableOutOfRange { index: usize, bound: usize },
    #[error("density {0} is not in [0, 1]")]
    BadDensity(f64),
    #[error("relation is not a strict partial order: {0}")]
    NotPartialOrder(String),
    #[error("instance exceeds the oracle size guard: {what} = {actual} > {limit}")]
    OracleGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
