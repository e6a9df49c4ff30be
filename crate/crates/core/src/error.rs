use thiserror::Error;

/// Errors raised while parsing, validating, or editing drawings.
#[derive(Debug, Error)]
pub enum DrawingError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("unsupported document version {0}")]
    Version(u32),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),
    #[error("edge `{0}` is a loop at vertex `{1}`")]
    LoopEdge(String, String),
    #[error("edges `{0}` and `{1}` are parallel ({2}-{3})")]
    ParallelEdge(String, String, String, String),
    #[error("edge `{0}` appears in two crossings")]
    EdgeInTwoCrossings(String),
    #[error("adjacent edges cross: `{0}` and `{1}` share vertex `{2}`")]
    AdjacentEdgesCross(String, String, String),
    #[error("crossing of `{0}` and `{1}`: rotation does not alternate between the two edges")]
    CrossingNotAlternating(String, String),
    #[error("crossing of `{0}` and `{1}`: segment ends do not name each endpoint exactly once")]
    CrossingEndsMismatch(String, String),
    #[error("rotation at vertex `{0}` lists `{1}` which is not incident")]
    RotationForeignEdge(String, String),
    #[error("rotation at vertex `{0}` mentions edge `{1}` {2} times (expected 1)")]
    RotationMultiplicity(String, String, usize),
    #[error("rotation system is not planar: component with {nodes} nodes, {arcs} arcs, {faces} faces violates Euler's relation")]
    NotPlanar { nodes: usize, arcs: usize, faces: usize },
    #[error("edge between `{0}` and `{1}` already present")]
    EdgeAlreadyPresent(String, String),
    #[error("invalid insertion witness: {0}")]
    InvalidWitness(String),
}

/// Errors from structure analysis preconditions (not lemma violations,
/// which are reported as data).
#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("drawing is not maximal: {0}")]
    NotMaximal(String),
    #[error("skeleton degenerate: {0}")]
    SkeletonDegenerate(String),
    #[error("edge `{0}` is not exceptional")]
    NotExceptional(String),
    #[error("{0}")]
    Drawing(#[from] DrawingError),
}

/// Errors from certificate construction and verification.
#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("decomposition failed: {0}")]
    Decompose(String),
    #[error("sweep stuck: {0}")]
    SweepStuck(String),
    #[error("certificate invalid at {at}: {reason}")]
    Invalid { at: String, reason: String },
    #[error("{0}")]
    Analysis(#[from] AnalysisError),
    #[error("{0}")]
    Drawing(#[from] DrawingError),
}
