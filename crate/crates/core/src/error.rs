use thiserror::Error;

/// Errors raised by constructors, counting routines and polynomial helpers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("hypergraph has {vertices} vertices, above the enumeration limit of {limit}")]
    EnumerationLimit { vertices: usize, limit: usize },

    #[error("not a strong independent set: {0}")]
    NotIndependent(String),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("series denominator has zero constant term")]
    SingularDenominator,

    #[error("power series coefficient {0} is not an integer")]
    NonIntegralSeries(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
