use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("arc ({0}, {1}) has no reverse arc; not a graph")]
    NotSymmetric(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("no branch decomposition: every vertex has degree 2")]
    NoBranch,

    #[error("vertex {0} does not exist")]
    MissingVertex(usize),

    #[error("edge {{{0}, {1}}} does not exist")]
    MissingEdge(usize, usize),

    #[error("attachment vertex {vertex} has degree 1")]
    InvalidAttachment { vertex: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{what}: n = {n} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("digraph has no arcs; the generated semigroup is empty")]
    NoArcs,

    #[error("element cap {cap} exceeded after {partial} elements; raise the cap to continue")]
    ElementCap { cap: usize, partial: usize },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("arc transformation needs distinct endpoints, got ({0}, {0})")]
    SameEndpoints(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
