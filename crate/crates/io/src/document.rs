//! The versioned JSON scenario file.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "policy": { "plaintiff_settle_threshold": "0.25" },
//!   "presets": [],
//!   "scenarios": [
//!     { "id": "h1", "currency": "EUR", "claim": "100000.00", "confirmation": "0.80",
//!       "plaintiff_trial_cost": "9000.00", "defendant_trial_cost": "9000.00",
//!       "plaintiff_settle_cost": "9000.00", "defendant_settle_cost": "9000.00",
//!       "indicators": { "z": 1, "kb": 1, "t_long": 1, "y": 1, "ka": 0, "t_short": 0 } }
//!   ]
//! }
//! ```

use std::collections::HashSet;

use litigacost_core::analysis::RegimePreset;
use litigacost_core::{
    validate_scenario, Currency, DisputeScenario, MonetaryAmount, MoneyError, PolicyConfig,
    RiskIndicators, ScenarioInput,
};
use rust_decimal::Decimal;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::issue::{Issue, IssueCode};

pub const SCHEMA_VERSION: u32 = 1;

/// One scenario as written in a file: amounts are decimal strings in major units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScenario {
    pub id: String,
    pub currency: String,
    pub claim: String,
    pub confirmation: Decimal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_d_override: Option<String>,
    pub plaintiff_trial_cost: String,
    pub defendant_trial_cost: String,
    pub plaintiff_settle_cost: String,
    pub defendant_settle_cost: String,
    pub indicators: RiskIndicators,
}

impl RawScenario {
    /// Parses currency and amounts, then checks every scenario invariant.
    /// Issues carry field paths relative to the scenario.
    pub fn validate(&self) -> Result<DisputeScenario, Vec<Issue>> {
        let mut issues = Vec::new();
        let currency = match self.currency.parse::<Currency>() {
            Ok(c) => Some(c),
            Err(err) => {
                issues.push(Issue::new(
                    IssueCode::InvalidCurrency,
                    "currency",
                    err.to_string(),
                ));
                None
            }
        };
        // Keep collecting amount problems even when the currency is unusable.
        let parse_currency = currency.unwrap_or(Currency::EUR);
        let mut amount =
            |field: &str, text: &str| match MonetaryAmount::parse_major(text, parse_currency) {
                Ok(a) => Some(a),
                Err(err) => {
                    let code = match err {
                        MoneyError::Overflow => {
                            IssueCode::Scenario(litigacost_core::ValidationCode::AmountOutOfRange)
                        }
                        _ => IssueCode::InvalidAmount,
                    };
                    issues.push(Issue::new(code, field, err.to_string()));
                    None
                }
            };
        let claim = amount("claim", &self.claim);
        let t_d_override = self
            .t_d_override
            .as_deref()
            .map(|t| amount("t_d_override", t));
        let plaintiff_trial_cost = amount("plaintiff_trial_cost", &self.plaintiff_trial_cost);
        let defendant_trial_cost = amount("defendant_trial_cost", &self.defendant_trial_cost);
        let plaintiff_settle_cost = amount("plaintiff_settle_cost", &self.plaintiff_settle_cost);
        let defendant_settle_cost = amount("defendant_settle_cost", &self.defendant_settle_cost);

        let (
            Some(_),
            Some(claim),
            Some(plaintiff_trial_cost),
            Some(defendant_trial_cost),
            Some(plaintiff_settle_cost),
            Some(defendant_settle_cost),
        ) = (
            currency,
            claim,
            plaintiff_trial_cost,
            defendant_trial_cost,
            plaintiff_settle_cost,
            defendant_settle_cost,
        )
        else {
            return Err(issues);
        };
        let t_d_override = match t_d_override {
            None => None,
            Some(Some(t)) => Some(t),
            Some(None) => return Err(issues),
        };
        if !issues.is_empty() {
            return Err(issues);
        }

        validate_scenario(ScenarioInput {
            id: self.id.clone(),
            claim,
            confirmation: self.confirmation,
            t_d_override,
            plaintiff_trial_cost,
            defendant_trial_cost,
            plaintiff_settle_cost,
            defendant_settle_cost,
            indicators: self.indicators,
        })
        .map_err(|errors| errors.into_iter().map(Issue::from).collect())
    }

    pub fn from_scenario(s: &DisputeScenario) -> Self {
        RawScenario {
            id: s.id().to_string(),
            currency: s.currency().to_string(),
            claim: s.claim().format_major(),
            confirmation: s.confirmation().value(),
            t_d_override: s.t_d_override().map(|t| t.format_major()),
            plaintiff_trial_cost: s.plaintiff_trial_cost().format_major(),
            defendant_trial_cost: s.defendant_trial_cost().format_major(),
            plaintiff_settle_cost: s.plaintiff_settle_cost().format_major(),
            defendant_settle_cost: s.defendant_settle_cost().format_major(),
            indicators: s.indicators(),
        }
    }
}

/// Partial policy: unset fields keep whatever the layer below says.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicyOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plaintiff_settle_threshold: Option<Decimal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defendant_settle_bound: Option<Decimal>,
}

impl PolicyOverrides {
    pub fn apply(&self, base: PolicyConfig) -> Result<PolicyConfig, litigacost_core::ModelError> {
        PolicyConfig::new(
            self.plaintiff_settle_threshold
                .unwrap_or(base.plaintiff_settle_threshold()),
            self.defendant_settle_bound
                .unwrap_or(base.defendant_settle_bound()),
        )
    }
}

/// The document exactly as serialized.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<PolicyOverrides>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub presets: Vec<RegimePreset>,
    pub scenarios: Vec<RawScenario>,
}

impl ScenarioDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// A document whose scenarios all passed validation.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedDocument {
    pub document: ScenarioDocument,
    pub scenarios: Vec<DisputeScenario>,
}

impl LoadedDocument {
    pub fn scenario(&self, id: &str) -> Option<&DisputeScenario> {
        self.scenarios.iter().find(|s| s.id() == id)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    schema_version: Option<Value>,
    #[serde(default)]
    policy: Option<Value>,
    #[serde(default)]
    presets: Option<Vec<Value>>,
    scenarios: Option<Vec<Value>>,
}

fn typed<T: DeserializeOwned>(value: Value, prefix: &str) -> Result<T, Issue> {
    serde_path_to_error::deserialize(value).map_err(|err| {
        let inner = err.path().to_string();
        let path = match (prefix.is_empty(), inner.as_str()) {
            (_, ".") => prefix.to_string(),
            (true, _) => inner,
            (false, _) => format!("{prefix}.{inner}"),
        };
        Issue::new(
            IssueCode::SchemaViolation,
            path,
            err.into_inner().to_string(),
        )
    })
}

fn malformed(err: impl std::fmt::Display) -> Vec<Issue> {
    vec![Issue::new(IssueCode::MalformedJson, "", err.to_string())]
}

/// Reads a scenario file, reporting every problem found rather than the first.
pub fn parse_scenario_file(bytes: &[u8]) -> Result<LoadedDocument, Vec<Issue>> {
    let text = std::str::from_utf8(bytes).map_err(malformed)?;
    let value: Value = serde_json::from_str(text).map_err(malformed)?;
    let envelope: Envelope = typed(value, "").map_err(|issue| vec![issue])?;

    let version = envelope.schema_version.ok_or_else(|| {
        vec![Issue::new(
            IssueCode::SchemaViolation,
            "schema_version",
            "missing field",
        )]
    })?;
    if version.as_u64() != Some(SCHEMA_VERSION as u64) {
        return Err(vec![Issue::new(
            IssueCode::UnknownSchemaVersion,
            "schema_version",
            format!("unsupported schema_version {version}, expected {SCHEMA_VERSION}"),
        )]);
    }

    let mut issues = Vec::new();

    let policy = match envelope.policy {
        None | Some(Value::Null) => None,
        Some(v) => match typed::<PolicyOverrides>(v, "policy") {
            Ok(p) => {
                if let Err(err) = p.apply(PolicyConfig::default()) {
                    issues.push(Issue::from_model(&err, "policy"));
                }
                Some(p)
            }
            Err(issue) => {
                issues.push(issue);
                None
            }
        },
    };

    let mut presets = Vec::new();
    for (i, v) in envelope.presets.unwrap_or_default().into_iter().enumerate() {
        let path = format!("presets[{i}]");
        match typed::<RegimePreset>(v, &path) {
            Ok(p) => {
                if let Err(err) = p.indicators.validate() {
                    issues.push(Issue::from_model(&err, format!("{path}.indicators")));
                }
                presets.push(p);
            }
            Err(issue) => issues.push(issue),
        }
    }

    let Some(raw_scenarios) = envelope.scenarios else {
        issues.push(Issue::new(
            IssueCode::SchemaViolation,
            "scenarios",
            "missing field",
        ));
        return Err(issues);
    };

    let mut seen = HashSet::new();
    let mut raws = Vec::with_capacity(raw_scenarios.len());
    let mut scenarios = Vec::with_capacity(raw_scenarios.len());
    for (i, v) in raw_scenarios.into_iter().enumerate() {
        let id = v.get("id").and_then(Value::as_str).map(str::to_string);
        let raw = match typed::<RawScenario>(v, "") {
            Ok(raw) => raw,
            Err(issue) => {
                issues.push(issue.in_scenario(Some(i), id.as_deref()));
                continue;
            }
        };
        if raw.id.trim().is_empty() {
            issues.push(
                Issue::new(IssueCode::EmptyId, "id", "scenario id must not be empty")
                    .in_scenario(Some(i), None),
            );
        } else if !seen.insert(raw.id.clone()) {
            issues.push(
                Issue::new(
                    IssueCode::DuplicateId,
                    "id",
                    format!("duplicate scenario id {:?}", raw.id),
                )
                .in_scenario(Some(i), Some(&raw.id)),
            );
        }
        match raw.validate() {
            Ok(s) => scenarios.push(s),
            Err(errs) => issues.extend(
                errs.into_iter()
                    .map(|e| e.in_scenario(Some(i), Some(&raw.id))),
            ),
        }
        raws.push(raw);
    }

    if !issues.is_empty() {
        return Err(issues);
    }
    Ok(LoadedDocument {
        document: ScenarioDocument {
            schema_version: SCHEMA_VERSION,
            policy,
            presets,
            scenarios: raws,
        },
        scenarios,
    })
}

/// A single scenario object, as accepted by the HTTP service.
pub fn parse_raw_scenario(value: Value) -> Result<DisputeScenario, Vec<Issue>> {
    let id = value.get("id").and_then(Value::as_str).map(str::to_string);
    let raw: RawScenario =
        typed(value, "").map_err(|i| vec![i.in_scenario(None, id.as_deref())])?;
    raw.validate().map_err(|errs| {
        errs.into_iter()
            .map(|e| e.in_scenario(None, Some(&raw.id)))
            .collect()
    })
}

/// A standalone policy file holds a `PolicyOverrides` object.
pub fn parse_policy_file(bytes: &[u8]) -> Result<PolicyOverrides, Vec<Issue>> {
    let text = std::str::from_utf8(bytes).map_err(malformed)?;
    let value: Value = serde_json::from_str(text).map_err(malformed)?;
    let overrides: PolicyOverrides = typed(value, "").map_err(|i| vec![i])?;
    overrides
        .apply(PolicyConfig::default())
        .map_err(|err| vec![Issue::from_model(&err, "")])?;
    Ok(overrides)
}
