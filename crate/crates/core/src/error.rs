use thiserror::Error;

/// Errors produced by graph construction, parsing and the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside the supported range 1..=64")]
    OrderOutOfRange(usize),

    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("zero degree in an edge term")]
    ZeroDegree,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration envelope exceeded: order {order} (supported 1..={max})")]
    EnvelopeExceeded { order: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}
