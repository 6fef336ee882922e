use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("unsupported parameter for {family}: {reason}")]
    UnsupportedParameter { family: &'static str, reason: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("robber arena is empty")]
    EmptyArena,

    #[error("invalid robber arena: {0}")]
    InvalidArena(String),

    #[error("estimated {states} states exceeds the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u64 },

    #[error("no win with at most {max} cops")]
    CopLimit { max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypergraph error: {0}")]
    Hypergraph(String),

    #[error("hypergraph parse error on line {line}: {reason}")]
    HypergraphParse { line: usize, reason: String },

    #[error("trace parse error on line {line}: {reason}")]
    TraceParse { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
