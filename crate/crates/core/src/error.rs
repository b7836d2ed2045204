use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Each variant names the precondition that was violated; [`Error::kind`]
/// gives the stable machine-readable identifier the CLI reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertex(String),
    #[error("edge endpoint {0:?} is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex subset does not induce a connected subgraph")]
    DisconnectedSubset,
    #[error("{0:?}-{1:?} is not an edge")]
    NotAnEdge(String, String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not a partial cube")]
    NotPartialCube,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("embedding does not cover exactly the vertices of the graph")]
    VertexMismatch,
    #[error("set is not a member of the family")]
    NotAMember,
    #[error("family has no members")]
    EmptyFamily,
    #[error("duplicate ground element {0:?}")]
    DuplicateElement(String),
    #[error("element {0:?} is not in the ground set")]
    UnknownElement(String),
    #[error("duplicate family member")]
    DuplicateMember,
    #[error("constructed lattice embedding failed verification: {0}")]
    EmbeddingVerificationFailed(String),
    #[error("vertex sets do not cover the graph: {0}")]
    NotCovering(String),
    #[error("vertex set does not induce an isometric subgraph")]
    NotIsometricSubgraph,
    #[error("vertex sets do not intersect")]
    EmptyIntersection,
    #[error("semicube of {0:?}-{1:?} is not convex")]
    NonConvexSemicube(String, String),
    #[error("semicubes of {0:?}-{1:?} do not partition the vertex set")]
    NotAPartition(String, String),
    #[error("edge class of {0:?}-{1:?} is not a matching inducing an isomorphism")]
    MatchingNotIsomorphism(String, String),
    #[error("invalid paste map: {0}")]
    InvalidPasteMap(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::UnknownEndpoint(_) => "UnknownEndpoint",
            Error::SelfLoop(_) => "SelfLoop",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::DisconnectedSubset => "DisconnectedSubset",
            Error::NotAnEdge(..) => "NotAnEdge",
            Error::Disconnected => "Disconnected",
            Error::EmptyGraph => "EmptyGraph",
            Error::NotPartialCube => "NotPartialCube",
            Error::NotBipartite => "NotBipartite",
            Error::VertexMismatch => "VertexMismatch",
            Error::NotAMember => "NotAMember",
            Error::EmptyFamily => "EmptyFamily",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::UnknownElement(_) => "UnknownElement",
            Error::DuplicateMember => "DuplicateMember",
            Error::EmbeddingVerificationFailed(_) => "EmbeddingVerificationFailed",
            Error::NotCovering(_) => "NotCovering",
            Error::NotIsometricSubgraph => "NotIsometricSubgraph",
            Error::EmptyIntersection => "EmptyIntersection",
            Error::NonConvexSemicube(..) => "NonConvexSemicube",
            Error::NotAPartition(..) => "NotAPartition",
            Error::MatchingNotIsomorphism(..) => "MatchingNotIsomorphism",
            Error::InvalidPasteMap(_) => "InvalidPasteMap",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
