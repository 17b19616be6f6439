use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("element {literal} does not belong to {ring}")]
    NotAnElement { ring: String, literal: String },

    #[error("ring {ring} has {order} elements, exceeding the exhaustion bound {bound}")]
    ExhaustionBoundExceeded {
        ring: String,
        order: String,
        bound: u128,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("unsupported ring {ring}: {reason}")]
    UnsupportedRing { ring: String, reason: String },

    #[error("{element} has no factorization e*u (idempotent times unit) in {ring}")]
    NotUnitRegular { ring: String, element: String },

    #[error("field {field} has {order} elements; twin units need at least 4")]
    FieldTooSmall { field: String, order: u64 },

    #[error("quotient {quotient} has no twin solution: {reason}")]
    QuotientUnsolvable { quotient: String, reason: String },

    #[error("not twin-good: component {component} has residue field {residue_field} and the matrix is 1x1")]
    NotTwinGood {
        component: String,
        residue_field: String,
    },

    #[error("not 2-good: {0}")]
    NotTwoGood(String),

    #[error("construction failed verification (internal bug): {0}")]
    ConstructionVerificationFailed(String),

    #[error("empty matrix: {0}")]
    EmptyMatrix(String),
}
