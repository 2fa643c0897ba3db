use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Errors from parsing a cobordism word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("strand mismatch at slice {slice}: expected {expected} input strands, found {actual}")]
    StrandMismatch {
        /// 1-based slice index.
        slice: usize,
        expected: usize,
        actual: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate form: the pairing a,b -> counit(ab) has a nontrivial radical")]
    DegenerateForm,
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("invalid algebra file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
