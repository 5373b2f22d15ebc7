//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("non-homogeneous input: {context}: offending term {term}")]
    Homogeneity { context: String, term: String },

    #[error("degenerate ring: a defining relation is a unit, so the quotient collapses")]
    DegenerateRing,

    #[error("operands belong to different rings: {0}")]
    RingMismatch(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("maps do not form a complex: composite is nonzero at {0}")]
    NotAComplex(String),

    #[error("operation undefined on the zero module")]
    ZeroModule,

    #[error("{operation} requires the standard grading (all weights 1)")]
    UnsupportedGrading { operation: String },

    #[error("fiber product factor is the residue field; both factors must be proper")]
    TrivialFactor,

    #[error("precondition failed: {reason}")]
    Precondition { reason: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl AlgebraError {
    pub fn homogeneity(context: impl Into<String>, term: impl Into<String>) -> Self {
        AlgebraError::Homogeneity {
            context: context.into(),
            term: term.into(),
        }
    }

    pub fn precondition(reason: impl Into<String>) -> Self {
        AlgebraError::Precondition {
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
