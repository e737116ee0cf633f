use crate::multigraph::{EdgeId, VertexId};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown vertex name `{0}`")]
    UnknownVertexName(String),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge {0} would be a loop")]
    Loop(EdgeId),
    #[error("contraction parts overlap at vertex {0}")]
    OverlappingParts(VertexId),
    #[error("contraction part of {0} must contain its root and no other root")]
    BadPart(VertexId),
    #[error("endpoint sets intersect at vertex {0}")]
    OverlappingEndpoints(VertexId),
    #[error("not inner Eulerian: vertex {vertex} has odd degree {degree}")]
    NotInnerEulerian { vertex: VertexId, degree: usize },
    #[error("vertex {0} is not a terminal")]
    NotTerminal(VertexId),
    #[error("linkability fails at terminal {terminal}: lambda = {lambda}, degree = {degree}")]
    NotLinkable {
        terminal: VertexId,
        lambda: usize,
        degree: usize,
    },
    #[error("invalid split of edges {e} and {f}: {reason}")]
    InvalidSplit {
        e: EdgeId,
        f: EdgeId,
        reason: &'static str,
    },
    #[error("no admissible partner for edge {edge} at vertex {vertex}")]
    NoAdmissiblePair { vertex: VertexId, edge: EdgeId },
    #[error("invalid path system: {0}")]
    InvalidPaths(String),
    #[error("cut is not a minimum cut between the given sets")]
    NotMinimumCut,
    #[error("edge {edge} is not incident with terminal {terminal}")]
    EdgeNotAtTerminal { edge: EdgeId, terminal: VertexId },
    #[error("edge {0} lies in the boundary of the source")]
    EdgeAtSource(EdgeId),
    #[error("instance too large: {what} is {got}, limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("path merge infeasible")]
    InfeasibleMerge,
    #[error("no removable T-path through edge {0}")]
    SearchExhausted(EdgeId),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
