use rust_decimal::Decimal;
use serde::Serialize;

use crate::error::ModelError;

/// Thresholds turning computed costs into recommended actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolicyConfig {
    /// Plaintiff proposes settlement once TC / claim reaches this share.
    plaintiff_settle_threshold: Decimal,
    /// Confirmation shares above this bound are flagged implausible.
    defendant_settle_bound: Decimal,
}

impl PolicyConfig {
    pub const DEFAULT_PLAINTIFF_SETTLE_THRESHOLD: Decimal = Decimal::from_parts(25, 0, 0, false, 2);
    pub const DEFAULT_DEFENDANT_SETTLE_BOUND: Decimal = Decimal::from_parts(80, 0, 0, false, 2);

    pub fn new(
        plaintiff_settle_threshold: Decimal,
        defendant_settle_bound: Decimal,
    ) -> Result<Self, ModelError> {
        if plaintiff_settle_threshold <= Decimal::ZERO || plaintiff_settle_threshold >= Decimal::ONE
        {
            return Err(ModelError::InvalidPolicy(format!(
                "plaintiff_settle_threshold {plaintiff_settle_threshold} must lie strictly between 0 and 1"
            )));
        }
        if defendant_settle_bound <= Decimal::ZERO || defendant_settle_bound > Decimal::ONE {
            return Err(ModelError::InvalidPolicy(format!(
                "defendant_settle_bound {defendant_settle_bound} must lie in (0, 1]"
            )));
        }
        Ok(PolicyConfig {
            plaintiff_settle_threshold,
            defendant_settle_bound,
        })
    }

    pub fn plaintiff_settle_threshold(&self) -> Decimal {
        self.plaintiff_settle_threshold
    }

    pub fn defendant_settle_bound(&self) -> Decimal {
        self.defendant_settle_bound
    }
}

impl Default for PolicyConfig {
    fn default() -> Self {
        PolicyConfig {
            plaintiff_settle_threshold: Self::DEFAULT_PLAINTIFF_SETTLE_THRESHOLD,
            defendant_settle_bound: Self::DEFAULT_DEFENDANT_SETTLE_BOUND,
        }
    }
}
