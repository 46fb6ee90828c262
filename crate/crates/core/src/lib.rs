//! Risk-adjusted transaction costs of enforcing a commercial contract through
//! court, and the settle-vs-litigate decisions they imply.
//!
//! The cost of litigating is the plaintiff's expected net recovery scaled by a
//! risk coefficient built from six binary indicators of the institutional
//! environment (expert reliability, predictability of outcomes, trial
//! duration, precautionary measures).
//!
//! ```
//! use litigacost_core::{transaction_cost, validate_scenario, Currency, MonetaryAmount, RiskIndicators, ScenarioInput};
//! use rust_decimal::Decimal;
//!
//! let eur = |major| MonetaryAmount::from_major(major, Currency::EUR).unwrap();
//! let scenario = validate_scenario(ScenarioInput {
//!     id: "example".into(),
//!     claim: eur(100_000),
//!     confirmation: Decimal::new(8, 1),
//!     t_d_override: None,
//!     plaintiff_trial_cost: eur(9_000),
//!     defendant_trial_cost: eur(9_000),
//!     plaintiff_settle_cost: eur(9_000),
//!     defendant_settle_cost: eur(9_000),
//!     indicators: RiskIndicators { z: true, kb: true, t_long: true, y: true, ka: false, t_short: false },
//! })
//! .unwrap();
//! assert_eq!(transaction_cost(&scenario).tc.format_major(), "4000.00");
//! ```

pub mod analysis;
mod error;
mod fraction;
mod indicators;
mod model;
mod money;
mod policy;
mod scenario;

pub use error::{ModelError, ValidationCode, ValidationError};
pub use fraction::{format_fixed4, Fraction};
pub use indicators::{Predictability, RiskIndicators, TrialDuration};
pub use model::{
    evaluate, recommend, risk_coefficient, settlement_gain, transaction_cost, CostComponents,
    DefendantAction, Evaluation, PlaintiffAction, Rationale, Recommendation, TransactionCostResult,
};
pub use money::{Currency, MonetaryAmount, MoneyError, MAX_ABS_MINOR_UNITS, MINOR_PER_MAJOR};
pub use policy::PolicyConfig;
pub use scenario::{validate_scenario, DisputeScenario, ScenarioInput};
