use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {0} is not a tip")]
    TipViolation(usize),

    #[error("join arity mismatch: |X| = {x}, |T2| = {tips}")]
    Arity { x: usize, tips: usize },

    #[error("join set is not homogeneous: N({a}) differs from N({b})")]
    Homogeneity { a: usize, b: usize },

    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("search budget exhausted after {explored} nodes without a verdict")]
    Inconclusive { explored: u64 },

    #[error("graph has {n} vertices; an explicit search budget is required above {limit}")]
    BudgetRequired { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
