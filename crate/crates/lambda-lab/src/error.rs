use thiserror::Error;

/// Library-wide error type.
///
/// Theorem-violation variants (`NoContractibleEdge`, `LiftValidation`,
/// `TheoremViolation`) are first-class outcomes: they are what a refutation
/// of the verified inequalities would look like, and must never be swallowed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    LoopEdge { vertex: usize },
    #[error("edge {a}-{b} not present in the graph")]
    EdgeNotPresent { a: usize, b: usize },
    #[error("unknown vertex {vertex} in deletion set")]
    UnknownVertex { vertex: usize },

    #[error("graph6: missing or malformed header")]
    Graph6Header,
    #[error("graph6: truncated bit vector (expected {expected} data characters, got {got})")]
    Graph6Truncated { expected: usize, got: usize },
    #[error("graph6: byte {byte:#04x} at position {pos} outside the valid range 63..=126")]
    Graph6InvalidChar { byte: u8, pos: usize },
    #[error("graph6: trailing data or nonzero padding after the bit vector")]
    Graph6Trailing,

    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is complete")]
    GraphIsComplete,
    #[error("cycle is not an induced cycle of this graph")]
    CycleNotInGraph,
    #[error("vertices {a},{b},{c} do not induce a triangle")]
    NotATriangle { a: usize, b: usize, c: usize },
    #[error("triangle {a},{b},{c} does not separate the graph")]
    TriangleNotSeparating { a: usize, b: usize, c: usize },
    #[error("invalid triangle gluing: {reason}")]
    InvalidGluing { reason: String },

    #[error("Hadwiger search is limited to {cap} vertices (override with LAMBDA_LAB_MAX_N), got {n}")]
    HadwigerCapExceeded { n: usize, cap: usize },
    #[error("invalid parameter: {reason}")]
    InvalidParameter { reason: String },

    #[error(
        "no edge keeps the graph 3-connected with unchanged Hadwiger number; \
         the contraction lemma is falsified on this input"
    )]
    NoContractibleEdge,
    #[error("lifted cycle failed validation: {reason}")]
    LiftValidation { reason: String },
    #[error("theorem violation: {reason}")]
    TheoremViolation { reason: String },

    #[error("colouring is not proper or not a partition: {reason}")]
    ImproperColouring { reason: String },
    #[error("colouring is not over-dominating")]
    NotOverDominating,

    #[error("exhaustive catalog supports 4..=8 vertices, got {n}")]
    CatalogRange { n: usize },
    #[error("infeasible generator parameters: {reason}")]
    InfeasibleParameters { reason: String },

    #[error("malformed certificate: {reason}")]
    MalformedCertificate { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
