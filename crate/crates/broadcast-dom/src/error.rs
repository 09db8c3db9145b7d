use thiserror::Error;

/// Errors produced by graph construction, broadcast predicates and solvers.
///
/// `Budget` is deliberately separate from the mathematical errors: a solver
/// that runs out of budget has not disproved anything.
#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a trivial component (isolated vertex {0}); broadcasts are undefined there")]
    TrivialComponent(usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),
    #[error("broadcast has {got} powers but the graph has {want} vertices")]
    BroadcastLength { got: usize, want: usize },
    #[error("broadcast power {power} exceeds eccentricity {ecc} at vertex {vertex}")]
    PowerExceedsEccentricity { vertex: usize, power: u32, ecc: u32 },
    #[error("every vertex is dominated; {0} is undefined")]
    NoUndominatedVertex(&'static str),
    #[error("vertex {0} is undominated")]
    UndominatedVertex(usize),
    #[error("vertex {0} is dominated")]
    DominatedVertex(usize),
    #[error("vertex {0} is not a positive broadcast vertex")]
    NotPositive(usize),
    #[error("broadcast is not irredundant: empty private boundary at vertex {0}")]
    NotIrredundant(usize),
    #[error("broadcast is not maximal irredundant")]
    NotMaximalIrredundant,
    #[error("start vertex {0} is blocked or not positive")]
    NotUnblockedPositive(usize),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("construction invariant violated: {0}")]
    Construction(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
