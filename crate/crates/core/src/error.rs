use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::money::MoneyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid risk indicators: {0}")]
    InvalidIndicators(String),
    #[error(transparent)]
    Money(#[from] MoneyError),
    #[error("invalid policy: {0}")]
    InvalidPolicy(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("risk coefficient is zero, transaction cost does not depend on confirmation")]
    ZeroRiskCoefficient,
    #[error("no confirmation share in [0, 1] reaches the target")]
    NoSolution,
    #[error("scenario fixes T_d through t_d_override, confirmation has no effect")]
    TdOverridePresent,
}

impl ModelError {
    /// Stable machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            ModelError::InvalidIndicators(_) => "InvalidIndicators",
            ModelError::Money(MoneyError::CurrencyMismatch { .. }) => "CurrencyMismatch",
            ModelError::Money(_) => "InvalidAmount",
            ModelError::InvalidPolicy(_) => "InvalidPolicy",
            ModelError::InvalidRange(_) => "InvalidRange",
            ModelError::ZeroRiskCoefficient => "ZeroRiskCoefficient",
            ModelError::NoSolution => "NoSolution",
            ModelError::TdOverridePresent => "TdOverridePresent",
        }
    }
}

/// Reasons a scenario fails validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ValidationCode {
    NonPositiveClaim,
    NegativeCost,
    CurrencyMismatch,
    FractionOutOfRange,
    InvalidIndicators,
    TdOverrideOutOfRange,
    AmountOutOfRange,
}

impl fmt::Display for ValidationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One violated scenario invariant, located by field path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[error("{field}: {message} ({code})")]
pub struct ValidationError {
    pub code: ValidationCode,
    pub field: String,
    pub message: String,
}

impl ValidationError {
    pub fn new(code: ValidationCode, field: impl Into<String>, message: impl Into<String>) -> Self {
        ValidationError {
            code,
            field: field.into(),
            message: message.into(),
        }
    }
}
