use serde::Serialize;

use crate::indicators::RiskIndicators;
use crate::model::transaction_cost;
use crate::money::MonetaryAmount;
use crate::scenario::DisputeScenario;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndicatorRow {
    pub indicators: RiskIndicators,
    pub risk_coefficient: i32,
    pub tc: MonetaryAmount,
}

/// The scenario's cost under each of the sixteen valid indicator sets.
/// The scenario's own indicators are ignored.
pub fn enumerate_indicator_space(s: &DisputeScenario) -> Vec<IndicatorRow> {
    RiskIndicators::all_valid()
        .into_iter()
        .map(|indicators| {
            let variant = s
                .with_indicators(indicators)
                .expect("all_valid yields valid indicator sets");
            let result = transaction_cost(&variant);
            IndicatorRow {
                indicators,
                risk_coefficient: result.risk_coefficient,
                tc: result.tc,
            }
        })
        .collect()
}
