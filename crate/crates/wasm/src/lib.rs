//! WebAssembly bindings behind the static what-if page in `www/`.
//!
//! Each export takes JSON text and returns a JSON envelope
//! `{ ok, result, errors }` shaped like the HTTP service's responses.

use litigacost_core::analysis::{
    builtin_presets, compare_regimes, find_preset, sweep_confirmation,
};
use litigacost_core::{Fraction, PolicyConfig};
use litigacost_io::{parse_raw_scenario, EvaluationRecord, Issue, PolicyOverrides};
use rust_decimal::Decimal;
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error(code: &str, field_path: &str, message: impl ToString) -> Value {
    json!({ "code": code, "message": message.to_string(), "field_path": field_path })
}

fn ok<T: Serialize>(result: T) -> String {
    json!({ "ok": true, "result": result, "errors": [] }).to_string()
}

fn failed(errors: Vec<Value>) -> String {
    json!({ "ok": false, "result": null, "errors": errors }).to_string()
}

fn issues(list: Vec<Issue>) -> Vec<Value> {
    list.into_iter()
        .map(|i| error(&i.code.to_string(), &i.field_path, i.message))
        .collect()
}

fn parse(text: &str, field: &str) -> Result<Value, Vec<Value>> {
    serde_json::from_str(text).map_err(|e| vec![error("MalformedJson", field, e)])
}

fn policy(text: &str) -> Result<PolicyConfig, Vec<Value>> {
    if text.trim().is_empty() {
        return Ok(PolicyConfig::default());
    }
    let overrides: PolicyOverrides =
        serde_json::from_str(text).map_err(|e| vec![error("SchemaViolation", "policy", e)])?;
    overrides
        .apply(PolicyConfig::default())
        .map_err(|e| vec![error("InvalidPolicy", "policy", e)])
}

fn share(text: &str, field: &str) -> Result<Fraction, Vec<Value>> {
    text.trim()
        .parse::<Decimal>()
        .ok()
        .and_then(Fraction::new)
        .ok_or_else(|| {
            vec![error(
                "FractionOutOfRange",
                field,
                format!("{text:?} is not a share in [0, 1]"),
            )]
        })
}

fn envelope(result: Result<String, Vec<Value>>) -> String {
    result.unwrap_or_else(failed)
}

/// Cost, settlement gain and recommendation for one scenario.
#[wasm_bindgen]
pub fn evaluate(scenario_json: &str, policy_json: &str) -> String {
    envelope((|| {
        let policy = policy(policy_json)?;
        let s = parse_raw_scenario(parse(scenario_json, "scenario")?).map_err(issues)?;
        Ok(ok(EvaluationRecord::new(&s, &policy)))
    })())
}

/// Evenly spaced confirmation sweep, endpoints included.
#[wasm_bindgen]
pub fn sweep(scenario_json: &str, policy_json: &str, min: &str, max: &str, steps: usize) -> String {
    envelope((|| {
        let policy = policy(policy_json)?;
        let s = parse_raw_scenario(parse(scenario_json, "scenario")?).map_err(issues)?;
        let series = sweep_confirmation(&s, share(min, "min")?, share(max, "max")?, steps, &policy)
            .map_err(|e| vec![error(e.code(), "steps", e)])?;
        Ok(ok(series))
    })())
}

/// Transaction cost before and after a change of institutional regime.
#[wasm_bindgen]
pub fn compare(scenario_json: &str, before: &str, after: &str) -> String {
    envelope((|| {
        let s = parse_raw_scenario(parse(scenario_json, "scenario")?).map_err(issues)?;
        let presets = builtin_presets();
        let lookup = |field: &str, name: &str| {
            find_preset(&[], &presets, name).ok_or_else(|| {
                vec![error(
                    "UnknownPreset",
                    field,
                    format!("no preset named {name:?}"),
                )]
            })
        };
        let cmp = compare_regimes(&s, lookup("before", before)?, lookup("after", after)?)
            .map_err(|e| vec![error(e.code(), "presets", e)])?;
        Ok(ok(cmp))
    })())
}

#[wasm_bindgen]
pub fn presets() -> String {
    ok(builtin_presets())
}
