//! The transaction cost model and the settle-vs-litigate rules.

use rust_decimal::Decimal;
use serde::Serialize;

use crate::error::ModelError;
use crate::fraction::{fixed4, round4};
use crate::indicators::RiskIndicators;
use crate::money::MonetaryAmount;
use crate::policy::PolicyConfig;
use crate::scenario::DisputeScenario;

/// Adverse conditions minus favorable ones: `(Z + Kb + t_l) − (Y + Ka + t_s)`.
///
/// Always in `[-3, 3]` for a valid indicator set.
pub fn risk_coefficient(ind: &RiskIndicators) -> Result<i32, ModelError> {
    ind.validate()?;
    Ok(coefficient_of(ind))
}

fn coefficient_of(ind: &RiskIndicators) -> i32 {
    let adverse = i32::from(ind.z) + i32::from(ind.kb) + i32::from(ind.t_long);
    let favorable = i32::from(ind.y) + i32::from(ind.ka) + i32::from(ind.t_short);
    adverse - favorable
}

/// Surplus from settling before trial: `(T_p − T_d) + (c_tp + c_td)`.
///
/// Settlement is rational for the defendant when this is strictly positive.
pub fn settlement_gain(s: &DisputeScenario) -> MonetaryAmount {
    let minor = s.t_p().minor_units() - s.t_d().minor_units()
        + s.plaintiff_settle_cost().minor_units()
        + s.defendant_settle_cost().minor_units();
    MonetaryAmount::from_minor(minor, s.currency())
}

/// Inputs of the cost formula, echoed back with every result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CostComponents {
    pub t_p: MonetaryAmount,
    pub t_d: MonetaryAmount,
    pub c_tp1: MonetaryAmount,
    pub c_td1: MonetaryAmount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransactionCostResult {
    pub risk_coefficient: i32,
    /// `(T_p − T_d) − (c_tp1 + c_td1)`.
    pub gross_margin: MonetaryAmount,
    /// `gross_margin × risk_coefficient`; negative values are a risk-adjusted
    /// surplus for the plaintiff.
    pub tc: MonetaryAmount,
    /// `tc / claim`, rounded half-to-even to four places.
    #[serde(with = "fixed4")]
    pub tc_fraction_of_claim: Decimal,
    pub components: CostComponents,
}

/// Risk-adjusted transaction cost of enforcing the contract through court.
pub fn transaction_cost(s: &DisputeScenario) -> TransactionCostResult {
    let currency = s.currency();
    let components = CostComponents {
        t_p: s.t_p(),
        t_d: s.t_d(),
        c_tp1: s.plaintiff_trial_cost(),
        c_td1: s.defendant_trial_cost(),
    };
    // Amounts are bounded at validation, so none of this can overflow i64.
    let margin = (components.t_p.minor_units() - components.t_d.minor_units())
        - (components.c_tp1.minor_units() + components.c_td1.minor_units());
    let coefficient = coefficient_of(&s.indicators());
    let tc = margin * i64::from(coefficient);
    TransactionCostResult {
        risk_coefficient: coefficient,
        gross_margin: MonetaryAmount::from_minor(margin, currency),
        tc: MonetaryAmount::from_minor(tc, currency),
        tc_fraction_of_claim: round4(Decimal::from(tc) / Decimal::from(s.claim().minor_units())),
        components,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PlaintiffAction {
    Litigate,
    ProposeSettlement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DefendantAction {
    ProposeSettlement,
    Contest,
}

/// Why a recommendation came out the way it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rationale {
    TcFractionBelowThreshold,
    TcFractionAtOrAboveThreshold,
    SettlementGainPositive,
    SettlementGainNonPositive,
    ConfirmationAboveDefendantBound,
    FavorableInstitutionalEnvironment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Recommendation {
    pub plaintiff_action: PlaintiffAction,
    pub defendant_action: DefendantAction,
    pub implausible: bool,
    pub rationale: Vec<Rationale>,
}

pub fn recommend(s: &DisputeScenario, p: &PolicyConfig) -> Recommendation {
    decide(s, p, &transaction_cost(s), settlement_gain(s))
}

fn decide(
    s: &DisputeScenario,
    p: &PolicyConfig,
    cost: &TransactionCostResult,
    gain: MonetaryAmount,
) -> Recommendation {
    let mut rationale = Vec::new();

    let plaintiff_action = if cost.tc_fraction_of_claim >= p.plaintiff_settle_threshold() {
        rationale.push(Rationale::TcFractionAtOrAboveThreshold);
        PlaintiffAction::ProposeSettlement
    } else {
        rationale.push(Rationale::TcFractionBelowThreshold);
        PlaintiffAction::Litigate
    };

    let defendant_action = if gain.is_positive() {
        rationale.push(Rationale::SettlementGainPositive);
        DefendantAction::ProposeSettlement
    } else {
        rationale.push(Rationale::SettlementGainNonPositive);
        DefendantAction::Contest
    };

    let implausible = s.confirmation().value() > p.defendant_settle_bound();
    if implausible {
        rationale.push(Rationale::ConfirmationAboveDefendantBound);
    }
    if cost.risk_coefficient < 0 {
        rationale.push(Rationale::FavorableInstitutionalEnvironment);
    }

    Recommendation {
        plaintiff_action,
        defendant_action,
        implausible,
        rationale,
    }
}

/// Everything the model says about one scenario.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub settlement_gain: MonetaryAmount,
    #[serde(flatten)]
    pub cost: TransactionCostResult,
    #[serde(flatten)]
    pub recommendation: Recommendation,
}

pub fn evaluate(s: &DisputeScenario, p: &PolicyConfig) -> Evaluation {
    let cost = transaction_cost(s);
    let gain = settlement_gain(s);
    let recommendation = decide(s, p, &cost, gain);
    Evaluation {
        settlement_gain: gain,
        cost,
        recommendation,
    }
}
