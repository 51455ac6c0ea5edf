use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("invalid family ({s}, {m}): {reason}")]
    InvalidFamily {
        s: String,
        m: String,
        reason: &'static str,
    },
    #[error("unknown family preset `{0}`")]
    UnknownPreset(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("tree size must be at least 1")]
    EmptyTree,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series constant term must be {expected}")]
    ConstantTerm { expected: &'static str },
    #[error("invalid increasing tree: {0}")]
    InvalidLabeling(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
