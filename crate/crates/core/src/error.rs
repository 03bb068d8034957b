use thiserror::Error;

/// Errors raised by the library. Every variant is a contract violation of
/// some operation's input; none of them is retried.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational {0:?}: expected \"num\" or \"num/den\"")]
    ParseRational(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix has no rows")]
    EmptyMatrix,

    #[error(
        "polynomial is not the random-cluster sum of a connected graph on {nodes} nodes: {detail}"
    )]
    NotClusterPolynomial { nodes: usize, detail: String },

    #[error("node count {n} outside supported range {min}..={max}")]
    NodeCountOutOfRange { n: usize, min: usize, max: usize },

    #[error("invalid graph text {0:?}")]
    ParseGraph(String),

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("invalid plane forest degree sequence {0:?}")]
    InvalidDegreeSequence(Vec<usize>),

    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("degenerate simplex (zero volume)")]
    DegenerateSimplex,

    #[error("vertex {index} violates inequality {row} of the H-representation")]
    InconsistentHRep { index: usize, row: usize },

    #[error("constant inequality {0} can never hold")]
    InfeasibleRow(String),

    #[error("malformed input: {0}")]
    Format(String),
}
