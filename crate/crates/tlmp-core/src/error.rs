//! Error type shared by every module.
//!
//! Mathematical *failures* (an identity that does not hold) are reported
//! through [`crate::report::Report`]; the variants here are for inputs that
//! cannot be processed at all, or for verdicts that an operation's contract
//! turns into an error (e.g. a non-cocycle handed to an extension builder).

use alloc::string::String;

use thiserror::Error;

use crate::exactlinalg::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension { context: &'static str, expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("subspace containment violated by vector {vector:?}")]
    NotContained { vector: Vector },

    #[error("singular map: {0}")]
    Singular(&'static str),

    #[error("not a 2-cocycle: equation {label} fails")]
    NotCocycle { label: String },

    #[error("axiom failure: {label}")]
    Axiom { label: String },

    #[error("value is not in the fiber: {0}")]
    NotInFiber(&'static str),

    #[error("automorphism pair is not compatible: {label} fails")]
    NotCompatible { label: String },

    #[error("1-cochain is not a 1-cocycle")]
    NotCocycle1,

    #[error("automorphism is not in the kernel of the restriction map")]
    NotInKernel,

    #[error("automorphism does not preserve the fiber")]
    FiberNotPreserved,

    #[error("certificate check failed: {0}")]
    Certificate(String),

    #[error("internal consistency fault: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn dimension(context: &'static str, expected: usize, found: usize) -> Self {
        Error::Dimension { context, expected, found }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
