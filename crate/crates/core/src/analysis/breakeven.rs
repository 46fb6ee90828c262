use rust_decimal::Decimal;

use crate::error::ModelError;
use crate::fraction::{round4, Fraction};
use crate::model::{risk_coefficient, transaction_cost};
use crate::scenario::DisputeScenario;

/// Confirmation share at which `tc / claim` equals `target_tc_fraction`.
///
/// With `A` the claim and `C` the summed trial costs, the cost is linear in the
/// share: `TC(f) = C_fr × ((1 − f)·A − C)`, so `f = 1 − C/A − target/C_fr`.
/// A solution just outside `[0, 1]` snaps to the boundary when the reported
/// (four-place) fraction there already equals the target.
pub fn break_even_fraction(
    s: &DisputeScenario,
    target_tc_fraction: Decimal,
) -> Result<Fraction, ModelError> {
    if s.t_d_override().is_some() {
        return Err(ModelError::TdOverridePresent);
    }
    let coefficient = risk_coefficient(&s.indicators())?;
    if coefficient == 0 {
        return Err(ModelError::ZeroRiskCoefficient);
    }
    let claim = Decimal::from(s.claim().minor_units());
    let trial_costs = Decimal::from(
        s.plaintiff_trial_cost().minor_units() + s.defendant_trial_cost().minor_units(),
    );
    let share = Decimal::ONE
        .checked_sub(trial_costs / claim)
        .and_then(|v| v.checked_sub(target_tc_fraction.checked_div(Decimal::from(coefficient))?))
        .ok_or(ModelError::NoSolution)?;
    if let Some(f) = Fraction::new(share.normalize()) {
        return Ok(f);
    }
    let boundary = if share < Decimal::ZERO {
        Fraction::ZERO
    } else {
        Fraction::ONE
    };
    if transaction_cost(&s.with_confirmation(boundary)).tc_fraction_of_claim
        == round4(target_tc_fraction)
    {
        Ok(boundary)
    } else {
        Err(ModelError::NoSolution)
    }
}
