use thiserror::Error;

use crate::order::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("variable index overflow while mapping {0}")]
    VarOverflow(Var),

    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,

    #[error("expected {expected} cofactors, found {found}")]
    IndexMismatch { expected: usize, found: usize },

    #[error("S-pair reduction budget of {limit} exceeded")]
    BudgetExceeded { limit: usize },

    #[error("operation requires a verified Groebner basis")]
    NotVerified,

    #[error("variable {0} is outside the domain of the injection")]
    NotInDomain(Var),

    #[error("map is not injective: {0} and {1} share an image")]
    NotInjective(Var, Var),

    #[error("duplicate variable {0} in precedence list")]
    DuplicateVar(Var),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
