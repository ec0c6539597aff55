use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("modulus {0} is reducible over the prime field")]
    ReducibleModulus(String),

    #[error("ring {0} is not local: its non-units do not form an ideal")]
    NotLocal(String),

    #[error("ring is a field and has no nonzero nilpotent elements")]
    IsField,

    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),

    #[error("ring of order {order} exceeds the element cap {cap}")]
    CapExceeded { order: String, cap: u64 },

    /// The ring is a field, so the graph has no vertices.
    #[error("the graph is empty (the ring is a field)")]
    EmptyGraph,

    #[error("{0} is prime, so Z/{0} is a field and its graph is empty")]
    PrimeInput(u64),

    #[error("algebraic connectivity needs at least two vertices (N = {0})")]
    TooFewVertices(String),

    #[error("tolerance {0:e} is below the floating-point resolution of the root")]
    ToleranceTooSmall(f64),

    #[error("inexact division in {0}")]
    InternalInexactDivision(&'static str),

    #[error("dimension {dim} exceeds the limit {limit} for {what}")]
    TooLarge {
        what: &'static str,
        dim: String,
        limit: u64,
    },

    #[error("vertex labeling does not match the multipartite shape")]
    LabelingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn too_large(what: &'static str, dim: impl ToString, limit: u64) -> Self {
        Error::TooLarge {
            what,
            dim: dim.to_string(),
            limit,
        }
    }
}
