use thiserror::Error;

use crate::surface::Violation;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("face graph is not a valid triangulated disc: {0}")]
    InvalidFaceGraph(String),
    #[error("identification produces a non-simple graph: {0}")]
    NonSimpleQuotient(String),
    #[error("graph is not a valid embedded graph: {0:?}")]
    InvalidPGraph(Vec<Violation>),
    #[error("input is not a triangulated Moebius strip: {0}")]
    NotMoebius(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown edge {0}-{1}")]
    UnknownEdge(String, String),
    #[error("edge {0}-{1} is not contractible")]
    NotContractible(String, String),
    #[error("moved set is not a contiguous arc of the link: {0}")]
    NotPlanarSplit(String),
    #[error("graph is not (3,6)-tight")]
    NotTight,
    #[error("reduction terminal is not a catalog graph; every full reduction is expected to end in one of the eight")]
    TerminalNotInCatalog,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("placement missing vertex {0}")]
    MissingVertex(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
