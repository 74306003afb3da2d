use thiserror::Error;

use crate::gf2poly::Gf2Poly;
use crate::triplecode::{TripleSpec, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("extended gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("polynomial is not invertible: gcd with the modulus is {gcd}")]
    NotInvertible { gcd: Gf2Poly },

    #[error("modulus must have degree at least 1")]
    TrivialModulus,

    #[error("parse error{}: {message}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    #[error("invalid spec: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidSpec { violations: Vec<Violation> },

    #[error("block lengths must be positive, got ({r},{s},{t})")]
    ZeroLength { r: usize, s: usize, t: usize },

    #[error("message has {got} bits, expected {expected}")]
    MessageLength { expected: usize, got: usize },

    #[error("codewords have different block lengths")]
    LengthMismatch,

    #[error("dimension {rank} exceeds the enumeration cap {cap}")]
    CapExceeded { rank: usize, cap: usize },

    #[error("row space is not closed under the simultaneous cyclic shift")]
    NotTripleCyclic,

    #[error("code is not separable")]
    NotSeparable,

    #[error("closed-form dual {closed} disagrees with oracle dual {oracle}")]
    DualMismatch {
        closed: Box<TripleSpec>,
        oracle: Box<TripleSpec>,
    },

    #[error("length {n} out of range 1..=64")]
    OutOfRange { n: usize },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
