use rust_decimal::Decimal;
use serde::Serialize;

use crate::error::ModelError;
use crate::fraction::{fixed4, Fraction};
use crate::model::{evaluate, DefendantAction, PlaintiffAction};
use crate::money::MonetaryAmount;
use crate::policy::PolicyConfig;
use crate::scenario::DisputeScenario;

pub const MAX_SWEEP_STEPS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepPoint {
    pub parameter_value: Fraction,
    pub tc: MonetaryAmount,
    #[serde(with = "fixed4")]
    pub tc_fraction: Decimal,
    pub plaintiff_action: PlaintiffAction,
    pub defendant_action: DefendantAction,
    pub implausible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSeries {
    pub scenario_id: String,
    pub parameter_name: String,
    pub points: Vec<SweepPoint>,
}

/// Evaluates the scenario on `steps` evenly spaced confirmation shares from
/// `f_min` to `f_max`, both endpoints included.
pub fn sweep_confirmation(
    s: &DisputeScenario,
    f_min: Fraction,
    f_max: Fraction,
    steps: usize,
    p: &PolicyConfig,
) -> Result<SweepSeries, ModelError> {
    if f_min >= f_max {
        return Err(ModelError::InvalidRange(format!(
            "f_min {} must be below f_max {}",
            f_min.value(),
            f_max.value()
        )));
    }
    if !(2..=MAX_SWEEP_STEPS).contains(&steps) {
        return Err(ModelError::InvalidRange(format!(
            "steps must be between 2 and {MAX_SWEEP_STEPS}, got {steps}"
        )));
    }
    if s.t_d_override().is_some() {
        return Err(ModelError::TdOverridePresent);
    }

    let span = f_max.value() - f_min.value();
    let intervals = Decimal::from(steps - 1);
    let mut points: Vec<SweepPoint> = Vec::with_capacity(steps);
    for i in 0..steps {
        let f = if i + 1 == steps {
            f_max
        } else {
            let offset = span * Decimal::from(i) / intervals;
            Fraction::new(f_min.value() + offset).expect("grid point inside [f_min, f_max]")
        };
        if let Some(prev) = points.last() {
            if prev.parameter_value >= f {
                return Err(ModelError::InvalidRange(
                    "range too narrow for the requested number of steps".into(),
                ));
            }
        }
        let e = evaluate(&s.with_confirmation(f), p);
        points.push(SweepPoint {
            parameter_value: f,
            tc: e.cost.tc,
            tc_fraction: e.cost.tc_fraction_of_claim,
            plaintiff_action: e.recommendation.plaintiff_action,
            defendant_action: e.recommendation.defendant_action,
            implausible: e.recommendation.implausible,
        });
    }

    Ok(SweepSeries {
        scenario_id: s.id().to_string(),
        parameter_name: "confirmation".into(),
        points,
    })
}
