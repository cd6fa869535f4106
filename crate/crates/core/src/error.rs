use thiserror::Error;

/// Errors raised by constructions and structural validation.
///
/// Axiom *failures* are not errors: checkers return a [`crate::report::CheckReport`]
/// listing violated identities. Errors signal malformed input or an
/// internal invariant that a forced construction failed to satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: cannot compose {left_rows}x{left_cols} after {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("shape error in {context}: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    Shape {
        context: String,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("objects are defined over different Hopf algebras")]
    HopfMismatch,

    #[error("{0} not invertible")]
    NotInvertible(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a co-wedge: {0}")]
    NotCowedge(String),

    #[error("factorization through the coend fails at test comodule {comodule}")]
    FactorizationFailed { comodule: String },

    #[error("{diagram} does not commute: {detail}")]
    Diagram { diagram: String, detail: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
