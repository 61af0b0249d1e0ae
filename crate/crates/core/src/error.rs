use thiserror::Error;

use crate::expr::ParseError;
use crate::ncalg::AlgId;
use crate::scalar::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown algebra `{0}` (expected qsl2, podles, laurent or smash)")]
    UnknownAlgebra(String),
    #[error("generator `{name}` cannot be inverted in {alg}")]
    NotInvertible { alg: AlgId, name: String },
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: AlgId, right: AlgId },
    #[error("operation `{op}` is not defined on {alg}")]
    Unsupported { op: &'static str, alg: AlgId },
    #[error("element is not in the image of the Podles sphere: {0}")]
    NotInPodles(String),
    #[error("filtration level {given} too small, need at least {required}")]
    FiltrationTooSmall { required: usize, given: usize },
    #[error("{0} is not a character: relation `{1}` fails")]
    NotACharacter(String, String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
