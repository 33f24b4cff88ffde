use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("point {0} lies outside [0,1]")]
    DomainError(Rational),

    #[error("unbound symbol {0:?}")]
    UnboundSymbol(String),

    #[error("no displacer found within word length {budget}")]
    BudgetExhausted { budget: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("support of element {element} touches the boundary of component {component}")]
    SupportTouchesBoundary { element: usize, component: usize },

    #[error("target does not equal the product of commutators")]
    ProductMismatch,

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("invalid generator index {0}, expected 0 or 1")]
    InvalidIndex(u32),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable short name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidMap(_) => "InvalidMap",
            Error::DomainError(_) => "DomainError",
            Error::UnboundSymbol(_) => "UnboundSymbol",
            Error::BudgetExhausted { .. } => "BudgetExhausted",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::SupportTouchesBoundary { .. } => "SupportTouchesBoundary",
            Error::ProductMismatch => "ProductMismatch",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::InvalidIndex(_) => "InvalidIndex",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
