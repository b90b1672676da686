use thiserror::Error;

use crate::classify::OrbitLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported prime {0}; expected one of 2, 3, 5, 7, 11, 13")]
    UnsupportedPrime(u64),
    #[error("inverse of zero")]
    InvZero,
    #[error("element has norm zero and is not invertible")]
    NotInvertible,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("label {label} has no representative over F_{p}")]
    UnreachableLabel { label: OrbitLabel, p: u8 },
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("classification failed for {dim}-dimensional subalgebra: {reason}")]
    Classification { dim: usize, reason: String },
    #[error("projected {projected} subspaces exceeds the budget of {budget}")]
    CostLimitExceeded { projected: u128, budget: u128 },
    #[error("enumeration over F_{0} is not supported")]
    UnsupportedField(u8),
    #[error("group closure stopped at the cap of {0} elements")]
    CapExceeded(usize),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
