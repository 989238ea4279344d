use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("polyhedron is empty")]
    EmptyPolyhedron,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is not full-dimensional")]
    NotFullDimensional,
    #[error("zero vector where a non-zero direction is required")]
    ZeroVector,
    #[error("degenerate segment: both endpoints coincide")]
    DegenerateSegment,
    #[error("point {0} is not on the boundary")]
    NotOnBoundary(String),
    #[error("point {0} is not a member of the set")]
    NotMember(String),
    #[error("dimension {0} exceeds the supported enumeration bound")]
    UnsupportedDimension(usize),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("instance is not closed: {0}")]
    NotClosed(&'static str),
    #[error("invalid epigraph: {0}")]
    InvalidEpigraph(String),
    #[error("point lies below the graph")]
    BelowGraph,
    #[error("checker does not accept {0} instances")]
    WrongInstance(&'static str),
    #[error("sample bound too small: {0}")]
    InvalidSampling(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
