//! Dispute scenarios and their validation.

use rust_decimal::Decimal;
use serde::Serialize;

use crate::error::{ValidationCode, ValidationError};
use crate::fraction::Fraction;
use crate::indicators::RiskIndicators;
use crate::money::{Currency, MonetaryAmount, MAX_ABS_MINOR_UNITS};

/// Scenario fields before any invariant has been checked.
///
/// Amounts are already parsed, but may disagree on currency, be negative or
/// out of range; indicator pairs may be inconsistent.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioInput {
    pub id: String,
    pub claim: MonetaryAmount,
    pub confirmation: Decimal,
    pub t_d_override: Option<MonetaryAmount>,
    pub plaintiff_trial_cost: MonetaryAmount,
    pub defendant_trial_cost: MonetaryAmount,
    pub plaintiff_settle_cost: MonetaryAmount,
    pub defendant_settle_cost: MonetaryAmount,
    pub indicators: RiskIndicators,
}

/// A single commercial dispute, valid by construction.
///
/// The plaintiff's subjective value of winning (`T_p`) is the claim itself;
/// the defendant's (`T_d`) is `confirmation × claim` rounded half-to-even to
/// whole minor units, unless overridden.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisputeScenario {
    id: String,
    claim: MonetaryAmount,
    confirmation: Fraction,
    t_d_override: Option<MonetaryAmount>,
    #[serde(skip)]
    t_d: MonetaryAmount,
    plaintiff_trial_cost: MonetaryAmount,
    defendant_trial_cost: MonetaryAmount,
    plaintiff_settle_cost: MonetaryAmount,
    defendant_settle_cost: MonetaryAmount,
    indicators: RiskIndicators,
}

/// Checks every invariant and reports all violations, not only the first.
pub fn validate_scenario(input: ScenarioInput) -> Result<DisputeScenario, Vec<ValidationError>> {
    let mut errors = Vec::new();
    let currency = input.claim.currency();

    let amounts = [
        ("claim", Some(input.claim)),
        ("t_d_override", input.t_d_override),
        ("plaintiff_trial_cost", Some(input.plaintiff_trial_cost)),
        ("defendant_trial_cost", Some(input.defendant_trial_cost)),
        ("plaintiff_settle_cost", Some(input.plaintiff_settle_cost)),
        ("defendant_settle_cost", Some(input.defendant_settle_cost)),
    ];
    for (field, amount) in amounts {
        let Some(amount) = amount else { continue };
        if amount.currency() != currency {
            errors.push(ValidationError::new(
                ValidationCode::CurrencyMismatch,
                field,
                format!(
                    "currency {} differs from claim currency {}",
                    amount.currency(),
                    currency
                ),
            ));
        }
        if amount.minor_units().unsigned_abs() > MAX_ABS_MINOR_UNITS as u64 {
            errors.push(ValidationError::new(
                ValidationCode::AmountOutOfRange,
                field,
                format!("magnitude exceeds {} minor units", MAX_ABS_MINOR_UNITS),
            ));
        }
    }

    if input.claim.minor_units() <= 0 {
        errors.push(ValidationError::new(
            ValidationCode::NonPositiveClaim,
            "claim",
            "claim must be greater than zero",
        ));
    }

    for (field, cost) in [
        ("plaintiff_trial_cost", input.plaintiff_trial_cost),
        ("defendant_trial_cost", input.defendant_trial_cost),
        ("plaintiff_settle_cost", input.plaintiff_settle_cost),
        ("defendant_settle_cost", input.defendant_settle_cost),
    ] {
        if cost.is_negative() {
            errors.push(ValidationError::new(
                ValidationCode::NegativeCost,
                field,
                "cost must not be negative",
            ));
        }
    }

    let confirmation = Fraction::new(input.confirmation);
    if confirmation.is_none() {
        errors.push(ValidationError::new(
            ValidationCode::FractionOutOfRange,
            "confirmation",
            format!("{} is outside [0, 1]", input.confirmation),
        ));
    }

    if let Some(t_d) = input.t_d_override {
        if t_d.is_negative() || t_d.minor_units() > input.claim.minor_units() {
            errors.push(ValidationError::new(
                ValidationCode::TdOverrideOutOfRange,
                "t_d_override",
                "t_d_override must lie between zero and the claim",
            ));
        }
    }

    if let Err(err) = input.indicators.validate() {
        errors.push(ValidationError::new(
            ValidationCode::InvalidIndicators,
            "indicators",
            err.to_string(),
        ));
    }

    match confirmation {
        Some(confirmation) if errors.is_empty() => {
            let t_d = derive_t_d(input.claim, confirmation, input.t_d_override);
            Ok(DisputeScenario {
                id: input.id,
                claim: input.claim,
                confirmation,
                t_d_override: input.t_d_override,
                t_d,
                plaintiff_trial_cost: input.plaintiff_trial_cost,
                defendant_trial_cost: input.defendant_trial_cost,
                plaintiff_settle_cost: input.plaintiff_settle_cost,
                defendant_settle_cost: input.defendant_settle_cost,
                indicators: input.indicators,
            })
        }
        _ => Err(errors),
    }
}

fn derive_t_d(
    claim: MonetaryAmount,
    confirmation: Fraction,
    t_d_override: Option<MonetaryAmount>,
) -> MonetaryAmount {
    t_d_override.unwrap_or_else(|| {
        claim
            .mul_fraction_round_half_even(confirmation.value())
            .expect("claim within bounds and share at most one")
    })
}

impl DisputeScenario {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn currency(&self) -> Currency {
        self.claim.currency()
    }

    pub fn claim(&self) -> MonetaryAmount {
        self.claim
    }

    /// `T_p`, the plaintiff's value of a successful trial.
    pub fn t_p(&self) -> MonetaryAmount {
        self.claim
    }

    /// `T_d`, the defendant's value of a successful trial.
    pub fn t_d(&self) -> MonetaryAmount {
        self.t_d
    }

    pub fn confirmation(&self) -> Fraction {
        self.confirmation
    }

    pub fn t_d_override(&self) -> Option<MonetaryAmount> {
        self.t_d_override
    }

    pub fn plaintiff_trial_cost(&self) -> MonetaryAmount {
        self.plaintiff_trial_cost
    }

    pub fn defendant_trial_cost(&self) -> MonetaryAmount {
        self.defendant_trial_cost
    }

    pub fn plaintiff_settle_cost(&self) -> MonetaryAmount {
        self.plaintiff_settle_cost
    }

    pub fn defendant_settle_cost(&self) -> MonetaryAmount {
        self.defendant_settle_cost
    }

    pub fn indicators(&self) -> RiskIndicators {
        self.indicators
    }

    /// Same dispute with a different confirmation share.
    pub fn with_confirmation(&self, confirmation: Fraction) -> DisputeScenario {
        DisputeScenario {
            confirmation,
            t_d: derive_t_d(self.claim, confirmation, self.t_d_override),
            ..self.clone()
        }
    }

    /// Same dispute under a different institutional environment.
    pub fn with_indicators(
        &self,
        indicators: RiskIndicators,
    ) -> Result<DisputeScenario, ValidationError> {
        indicators.validate().map_err(|err| {
            ValidationError::new(
                ValidationCode::InvalidIndicators,
                "indicators",
                err.to_string(),
            )
        })?;
        Ok(DisputeScenario {
            indicators,
            ..self.clone()
        })
    }

    /// Back to unchecked fields, e.g. for re-serialization.
    pub fn to_input(&self) -> ScenarioInput {
        ScenarioInput {
            id: self.id.clone(),
            claim: self.claim,
            confirmation: self.confirmation.value(),
            t_d_override: self.t_d_override,
            plaintiff_trial_cost: self.plaintiff_trial_cost,
            defendant_trial_cost: self.defendant_trial_cost,
            plaintiff_settle_cost: self.plaintiff_settle_cost,
            defendant_settle_cost: self.defendant_settle_cost,
            indicators: self.indicators,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indicators::{Predictability, TrialDuration};

    fn eur(major: i64) -> MonetaryAmount {
        MonetaryAmount::from_major(major, Currency::EUR).unwrap()
    }

    fn first_hypothesis() -> ScenarioInput {
        ScenarioInput {
            id: "h1".into(),
            claim: eur(100_000),
            confirmation: Decimal::new(8, 1),
            t_d_override: None,
            plaintiff_trial_cost: eur(9_000),
            defendant_trial_cost: eur(9_000),
            plaintiff_settle_cost: eur(9_000),
            defendant_settle_cost: eur(9_000),
            indicators: RiskIndicators::from_states(
                true,
                Predictability::Absent,
                TrialDuration::OverOneYear,
                true,
            ),
        }
    }

    fn codes(errors: &[ValidationError]) -> Vec<ValidationCode> {
        errors.iter().map(|e| e.code).collect()
    }

    #[test]
    fn first_hypothesis_is_valid() {
        let s = validate_scenario(first_hypothesis()).unwrap();
        assert_eq!(s.t_p(), eur(100_000));
        assert_eq!(s.t_d(), eur(80_000));
    }

    #[test]
    fn zero_claim_rejected() {
        let mut input = first_hypothesis();
        input.claim = eur(0);
        let errs = validate_scenario(input).unwrap_err();
        assert!(codes(&errs).contains(&ValidationCode::NonPositiveClaim));
    }

    #[test]
    fn both_predictability_bits_rejected() {
        let mut input = first_hypothesis();
        input.indicators.ka = true;
        let errs = validate_scenario(input).unwrap_err();
        assert_eq!(codes(&errs), vec![ValidationCode::InvalidIndicators]);
        assert_eq!(errs[0].field, "indicators");
    }

    #[test]
    fn collects_every_violation() {
        let usd: Currency = "USD".parse().unwrap();
        let mut input = first_hypothesis();
        input.claim = eur(-5);
        input.confirmation = Decimal::new(15, 1);
        input.plaintiff_trial_cost = eur(-1);
        input.defendant_settle_cost = MonetaryAmount::from_minor(100, usd);
        input.t_d_override = Some(eur(1));
        input.indicators.t_short = true;
        let errs = validate_scenario(input).unwrap_err();
        let got = codes(&errs);
        for expected in [
            ValidationCode::NonPositiveClaim,
            ValidationCode::FractionOutOfRange,
            ValidationCode::NegativeCost,
            ValidationCode::CurrencyMismatch,
            ValidationCode::TdOverrideOutOfRange,
            ValidationCode::InvalidIndicators,
        ] {
            assert!(got.contains(&expected), "missing {expected:?} in {got:?}");
        }
    }

    #[test]
    fn t_d_override_bounds() {
        let mut input = first_hypothesis();
        input.t_d_override = Some(eur(100_001));
        assert_eq!(
            codes(&validate_scenario(input.clone()).unwrap_err()),
            vec![ValidationCode::TdOverrideOutOfRange]
        );
        input.t_d_override = Some(eur(100_000));
        let s = validate_scenario(input).unwrap();
        assert_eq!(s.t_d(), eur(100_000));
        // override wins over the confirmation share
        assert_eq!(s.with_confirmation(Fraction::ZERO).t_d(), eur(100_000));
    }

    #[test]
    fn huge_amounts_rejected() {
        let mut input = first_hypothesis();
        input.claim = MonetaryAmount::from_minor(MAX_ABS_MINOR_UNITS + 1, Currency::EUR);
        assert_eq!(
            codes(&validate_scenario(input).unwrap_err()),
            vec![ValidationCode::AmountOutOfRange]
        );
    }

    #[test]
    fn derived_t_d_rounds_half_even() {
        let mut input = first_hypothesis();
        input.claim = MonetaryAmount::from_minor(5, Currency::EUR);
        input.confirmation = Decimal::new(5, 1);
        assert_eq!(
            validate_scenario(input.clone())
                .unwrap()
                .t_d()
                .minor_units(),
            2
        );
        input.claim = MonetaryAmount::from_minor(7, Currency::EUR);
        assert_eq!(validate_scenario(input).unwrap().t_d().minor_units(), 4);
    }
}
