use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected: {reached} of {n} vertices reachable from vertex 0")]
    Disconnected { reached: usize, n: usize },

    #[error("a graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),

    #[error("infeasible {family}: {reason}")]
    Infeasible { family: String, reason: String },
}

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("expected exactly one zero eigenvalue, found {zeros} (disconnected input?)")]
    RankDeficient { zeros: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,
}

/// Reason a bound formula does not apply to the given inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("inapplicable: {0}")]
pub struct Inapplicable(pub String);

impl Inapplicable {
    pub fn new(reason: impl Into<String>) -> Self {
        Inapplicable(reason.into())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
