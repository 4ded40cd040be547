use thiserror::Error;

/// Errors raised by graph construction, analysis and generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0},{0}) is a loop")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("metric triangle is not equilateral")]
    NotEquilateral,
    #[error("sequence is not a geodesic string")]
    NotGeodesicString,
    #[error("function is not peakless on the interval between {u} and {v}")]
    NotPeakless { u: usize, v: usize },
    #[error("interval between {u} and {v} has empty interior")]
    EmptyInterior { u: usize, v: usize },
    #[error("search budget of {0} profiles exceeded")]
    BudgetExceeded(u64),
    #[error("interior of size {size} exceeds cap {cap}")]
    InteriorTooLarge { size: usize, cap: usize },
    #[error("pair is at distance {found}, expected {expected}")]
    WrongDistance { expected: u32, found: u32 },
    #[error("label of vertex {0} has the wrong size or parity for the target")]
    LabelArity(usize),
    #[error("labeled embedding does not verify")]
    EmbeddingUnverified,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("template image is not gated")]
    NotGated,
    #[error("template images are not isomorphic as induced subgraphs")]
    NotInducedIso,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("hexagon set encloses a hole")]
    HoleDetected,
    #[error("hexagon set is not connected")]
    DisconnectedHexagons,
    #[error("constraints unsatisfiable: {0}")]
    ConstraintsUnsatisfiable(String),
    #[error("profile support contains vertex {vertex}, graph has {n} vertices")]
    ProfileSupportOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
