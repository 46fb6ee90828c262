use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::indicators::{Predictability, RiskIndicators, TrialDuration};
use crate::model::transaction_cost;
use crate::money::MonetaryAmount;
use crate::scenario::DisputeScenario;

/// A named institutional state of the court system.
///
/// With `inherit_y` set, the precautionary-measures bit comes from the
/// scenario being compared rather than from the preset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimePreset {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub indicators: RiskIndicators,
    #[serde(default)]
    pub inherit_y: bool,
}

impl RegimePreset {
    pub fn indicators_for(&self, s: &DisputeScenario) -> RiskIndicators {
        let mut ind = self.indicators;
        if self.inherit_y {
            ind.y = s.indicators().y;
        }
        ind
    }
}

/// Presets shipped with the engine. Users may define more in scenario files.
pub fn builtin_presets() -> Vec<RegimePreset> {
    vec![
        RegimePreset {
            name: "BG-pre-reform".into(),
            description: "Unreliable forensic accounting expertise (under-qualified experts, \
                          conflicts of interest within expert alliances), unpredictable \
                          outcomes, trials over one year"
                .into(),
            indicators: RiskIndicators::from_states(
                true,
                Predictability::Absent,
                TrialDuration::OverOneYear,
                false,
            ),
            inherit_y: true,
        },
        RegimePreset {
            name: "expertise-reformed".into(),
            description: "Expert-witness failures removed; outcomes still unpredictable, \
                          trials still over one year"
                .into(),
            indicators: RiskIndicators::from_states(
                false,
                Predictability::Absent,
                TrialDuration::OverOneYear,
                false,
            ),
            inherit_y: true,
        },
        RegimePreset {
            name: "reformed".into(),
            description: "Reliable expertise, predictable outcomes, trials under one year".into(),
            indicators: RiskIndicators::from_states(
                false,
                Predictability::Present,
                TrialDuration::UnderOneYear,
                false,
            ),
            inherit_y: true,
        },
    ]
}

/// Looks a preset up by name, user presets shadowing built-in ones.
pub fn find_preset<'a>(
    user: &'a [RegimePreset],
    builtin: &'a [RegimePreset],
    name: &str,
) -> Option<&'a RegimePreset> {
    user.iter().chain(builtin.iter()).find(|p| p.name == name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    ReformEffective,
    ReformIneffective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegimeComparison {
    pub scenario_id: String,
    pub before: String,
    pub after: String,
    pub risk_coefficient_before: i32,
    pub risk_coefficient_after: i32,
    pub tc_before: MonetaryAmount,
    pub tc_after: MonetaryAmount,
    /// `tc_after − tc_before`.
    pub delta: MonetaryAmount,
    pub verdict: Verdict,
}

/// A reform is effective only if it strictly lowers the transaction cost;
/// an unchanged cost counts as ineffective.
pub fn compare_regimes(
    s: &DisputeScenario,
    before: &RegimePreset,
    after: &RegimePreset,
) -> Result<RegimeComparison, ModelError> {
    let cost_under = |preset: &RegimePreset| {
        s.with_indicators(preset.indicators_for(s))
            .map(|variant| transaction_cost(&variant))
            .map_err(|err| {
                ModelError::InvalidIndicators(format!("preset {}: {}", preset.name, err.message))
            })
    };
    let before_cost = cost_under(before)?;
    let after_cost = cost_under(after)?;
    let delta = after_cost.tc.checked_sub(before_cost.tc)?;
    let verdict = if delta.is_negative() {
        Verdict::ReformEffective
    } else {
        Verdict::ReformIneffective
    };
    Ok(RegimeComparison {
        scenario_id: s.id().to_string(),
        before: before.name.clone(),
        after: after.name.clone(),
        risk_coefficient_before: before_cost.risk_coefficient,
        risk_coefficient_after: after_cost.risk_coefficient,
        tc_before: before_cost.tc,
        tc_after: after_cost.tc,
        delta,
        verdict,
    })
}
