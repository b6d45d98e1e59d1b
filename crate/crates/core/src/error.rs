use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A table or series request exceeds the configured work budget.
    #[error("resource limit exceeded: {what} = {requested} > {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    /// Partition enumeration was asked for a target above its bound.
    #[error("enumeration bound exceeded: k = {k} > {bound}")]
    BoundExceeded { k: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(&'static str),

    /// The partial product is too short for the requested evaluation point.
    #[error("inadequate truncation: n = {given} but x = {x} needs n >= {required}")]
    InadequateTruncation {
        x: f64,
        given: usize,
        required: usize,
    },

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
