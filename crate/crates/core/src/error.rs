use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("form of degree {expected} evaluated on {got} vectors")]
    Arity { expected: usize, got: usize },

    #[error("structure equations violate d^2 = 0 on e{0}")]
    Jacobi(usize),

    #[error("{0} is not invertible in the Laurent ring")]
    NotInvertible(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("invalid parameter set: {0}")]
    InvalidParameters(String),

    #[error("sign convention mismatch: {0}")]
    Convention(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("parameter `{0}` must be bound to a number here")]
    Unbound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
