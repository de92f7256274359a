use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),

    #[error("vertex set for r-gluing is not a clique: {0:?}")]
    NotAClique(Vec<usize>),

    #[error("r-gluing clique sizes differ: {left} vs {right}")]
    GlueSizeMismatch { left: usize, right: usize },

    #[error("malformed graph input at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },

    #[error("{0} is undefined for this graph")]
    UndefinedParameter(&'static str),

    #[error("colors must be dense 1..k: {0}")]
    ColorIndices(String),

    #[error("graph with {n} vertices exceeds the cap of {cap} for {what}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("solver budget of {0} ms exceeded")]
    BudgetExceeded(u64),

    #[error("circulant reduction needs gcd(a, n) = 1, got gcd({a}, {n}) = {gcd}")]
    NotInvertible { a: usize, n: usize, gcd: usize },

    #[error("no prediction for {0}")]
    Unsupported(String),

    #[error("inconsistent interval [{lo}, {hi}]")]
    EmptyInterval { lo: usize, hi: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
