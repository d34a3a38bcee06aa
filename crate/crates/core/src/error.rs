use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {0} is outside the supported range 1..=64")]
    Order(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("order {order} exceeds the budget of {limit} for {what}")]
    Budget {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree {
        vertex: usize,
        degree: usize,
        expected: String,
    },
    #[error("graph is acyclic")]
    Acyclic,
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
