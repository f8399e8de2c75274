use thiserror::Error;

/// Errors shared across the crate.
///
/// `Undecided` is special: it means a search gave up on its budget without
/// reaching an answer. It must never be collapsed into a yes/no verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("pair {{{0},{1}}} assigned twice")]
    DuplicatePair(usize, usize),
    #[error("pair {{{0},{1}}} unassigned")]
    MissingPair(usize, usize),
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{op}: size {n} exceeds limit {limit}")]
    SizeLimit {
        op: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("operation requires a nonempty tournament")]
    EmptyTournament,
    #[error("block list has even length {0}; expected odd")]
    EvenBlockList(usize),
    #[error("family parameter must be at least 1")]
    ZeroParam,
    #[error("{op}: parameter {got} below minimum {min}")]
    ParamBelowMin {
        op: &'static str,
        min: usize,
        got: usize,
    },
    #[error("set size {size} outside homogeneous bounds 1 < |S| < {n}")]
    HomogeneousBounds { size: usize, n: usize },
    #[error("coloring does not assign every vertex exactly once (got {got}, need {need})")]
    PartialColoring { got: usize, need: usize },
    #[error("ordering is not a forest ordering of this tournament")]
    NotForestOrdering,
    #[error("tournament is not strongly connected")]
    NotStronglyConnected,
    #[error("tournament is not prime")]
    NotPrime,
    #[error("tournament contains {pattern} at vertices {witness:?}")]
    ForbiddenSubtournament {
        pattern: String,
        witness: Vec<usize>,
    },
    #[error("thickness is undefined for fewer than 2 vertices")]
    TooFewVertices,
    #[error("{op}: expected size {expected}, got {got}")]
    WrongSize {
        op: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("arithmetic overflow while building the integer map")]
    Overflow,
    #[error("undecided: {0} exceeded its search budget")]
    Undecided(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
