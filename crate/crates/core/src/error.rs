use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: u32, found: u32 },

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("matrix does not preserve the intersection pairing mod 2")]
    NotSymplectic,

    #[error("{what} exceeds the supported bound ({found} > {limit})")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        found: usize,
    },

    #[error("invalid `{field}`: {message}")]
    InvalidInput { field: String, message: String },

    #[error("permutation is not rotation-like: {0}")]
    NotRotationLike(String),

    #[error("invalid orbit shape: {0}")]
    InvalidShape(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("order {0} is even; the quotient-genus criterion needs odd order")]
    EvenOrder(u64),

    #[error("eigenvalue-1 multiplicity {0} is odd, so no automorphism has this canonical form")]
    OddFixedMultiplicity(u32),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),
}

impl Error {
    pub(crate) fn input(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidInput {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
