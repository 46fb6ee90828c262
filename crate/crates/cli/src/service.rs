//! JSON over HTTP facade for the model and analysis operations.
//!
//! Every response is an envelope `{ ok, result, errors }`. Malformed JSON is
//! a 400, anything that parses but fails validation is a 422.

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use litigacost_core::analysis::{
    break_even_fraction, builtin_presets, compare_regimes, find_preset, sweep_confirmation,
    RegimePreset,
};
use litigacost_core::{DisputeScenario, Fraction, ModelError, PolicyConfig};
use litigacost_io::{parse_raw_scenario, EvaluationRecord, Issue, IssueCode, PolicyOverrides};
use rust_decimal::Decimal;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use tower_http::cors::{AllowOrigin, CorsLayer};

/// Immutable configuration shared by all handlers.
#[derive(Debug, Clone)]
pub struct ServiceConfig {
    pub policy: PolicyConfig,
    pub presets: Vec<RegimePreset>,
    pub allow_origin: Option<String>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            policy: PolicyConfig::default(),
            presets: builtin_presets(),
            allow_origin: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub code: String,
    pub message: String,
    pub field_path: String,
}

impl From<Issue> for ApiError {
    fn from(issue: Issue) -> Self {
        ApiError {
            code: issue.code.to_string(),
            message: issue.message,
            field_path: issue.field_path,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ApiEnvelope<T> {
    pub ok: bool,
    pub result: Option<T>,
    pub errors: Vec<ApiError>,
}

struct Failure {
    status: StatusCode,
    errors: Vec<ApiError>,
}

impl Failure {
    fn unprocessable(errors: Vec<ApiError>) -> Self {
        Failure {
            status: StatusCode::UNPROCESSABLE_ENTITY,
            errors,
        }
    }

    fn single(
        status: StatusCode,
        code: &str,
        field_path: &str,
        message: impl Into<String>,
    ) -> Self {
        Failure {
            status,
            errors: vec![ApiError {
                code: code.into(),
                message: message.into(),
                field_path: field_path.into(),
            }],
        }
    }

    fn model(err: ModelError, field_path: &str) -> Self {
        Failure::single(
            StatusCode::UNPROCESSABLE_ENTITY,
            err.code(),
            field_path,
            err.to_string(),
        )
    }

    fn issues(issues: Vec<Issue>, prefix: &str) -> Self {
        Failure::unprocessable(
            issues
                .into_iter()
                .map(|issue| {
                    let mut e = ApiError::from(issue);
                    e.field_path = join_path(prefix, &e.field_path);
                    e
                })
                .collect(),
        )
    }
}

impl IntoResponse for Failure {
    fn into_response(self) -> Response {
        let body = ApiEnvelope::<()> {
            ok: false,
            result: None,
            errors: self.errors,
        };
        (self.status, Json(body)).into_response()
    }
}

fn success<T: Serialize>(result: T) -> Response {
    Json(ApiEnvelope {
        ok: true,
        result: Some(result),
        errors: Vec::new(),
    })
    .into_response()
}

fn join_path(prefix: &str, path: &str) -> String {
    match (prefix.is_empty(), path.is_empty()) {
        (true, _) => path.to_string(),
        (false, true) => prefix.to_string(),
        (false, false) => format!("{prefix}.{path}"),
    }
}

/// Syntax errors are a 400; well-formed JSON of the wrong shape is a 422.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, Failure> {
    let value: Value = serde_json::from_slice(body).map_err(|err| {
        Failure::single(
            StatusCode::BAD_REQUEST,
            "MalformedJson",
            "",
            err.to_string(),
        )
    })?;
    serde_path_to_error::deserialize(value).map_err(|err| {
        let path = err.path().to_string();
        let path = if path == "." { String::new() } else { path };
        Failure::single(
            StatusCode::UNPROCESSABLE_ENTITY,
            "SchemaViolation",
            &path,
            err.into_inner().to_string(),
        )
    })
}

/// Bodies carry the scenario under `scenario`, but errors report paths
/// relative to it (`confirmation`, not `scenario.confirmation`) so a client
/// can map them straight onto form fields.
fn scenario_of(value: Value) -> Result<DisputeScenario, Failure> {
    parse_raw_scenario(value).map_err(|issues| Failure::issues(issues, ""))
}

fn policy_of(
    config: &ServiceConfig,
    overrides: Option<PolicyOverrides>,
) -> Result<PolicyConfig, Failure> {
    overrides
        .unwrap_or_default()
        .apply(config.policy)
        .map_err(|err| {
            Failure::single(
                StatusCode::UNPROCESSABLE_ENTITY,
                "InvalidPolicy",
                "policy",
                err.to_string(),
            )
        })
}

fn fraction_of(value: Decimal, field: &str) -> Result<Fraction, Failure> {
    Fraction::new(value).ok_or_else(|| {
        Failure::single(
            StatusCode::UNPROCESSABLE_ENTITY,
            &IssueCode::Scenario(litigacost_core::ValidationCode::FractionOutOfRange).to_string(),
            field,
            format!("{value} is outside [0, 1]"),
        )
    })
}

fn respond(result: Result<Response, Failure>) -> Response {
    result.unwrap_or_else(IntoResponse::into_response)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EvaluateRequest {
    scenario: Value,
    #[serde(default)]
    policy: Option<PolicyOverrides>,
}

async fn evaluate(State(config): State<Arc<ServiceConfig>>, body: Bytes) -> Response {
    respond((|| {
        let req: EvaluateRequest = parse_body(&body)?;
        let policy = policy_of(&config, req.policy)?;
        let s = scenario_of(req.scenario)?;
        Ok(success(EvaluationRecord::new(&s, &policy)))
    })())
}

fn default_param() -> String {
    "confirmation".into()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepRequest {
    scenario: Value,
    #[serde(default)]
    policy: Option<PolicyOverrides>,
    #[serde(default = "default_param")]
    param: String,
    min: Decimal,
    max: Decimal,
    steps: usize,
}

async fn sweep(State(config): State<Arc<ServiceConfig>>, body: Bytes) -> Response {
    respond((|| {
        let req: SweepRequest = parse_body(&body)?;
        if req.param != "confirmation" {
            return Err(Failure::single(
                StatusCode::UNPROCESSABLE_ENTITY,
                "UnknownParameter",
                "param",
                format!("cannot sweep {:?}, only \"confirmation\"", req.param),
            ));
        }
        let policy = policy_of(&config, req.policy)?;
        let s = scenario_of(req.scenario)?;
        let (min, max) = (fraction_of(req.min, "min")?, fraction_of(req.max, "max")?);
        let series = sweep_confirmation(&s, min, max, req.steps, &policy)
            .map_err(|e| Failure::model(e, "steps"))?;
        Ok(success(series))
    })())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BreakEvenRequest {
    scenario: Value,
    target_fraction: Decimal,
}

async fn breakeven(body: Bytes) -> Response {
    respond((|| {
        let req: BreakEvenRequest = parse_body(&body)?;
        let s = scenario_of(req.scenario)?;
        let f = break_even_fraction(&s, req.target_fraction)
            .map_err(|e| Failure::model(e, "target_fraction"))?;
        Ok(success(f))
    })())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CompareRequest {
    scenario: Value,
    before: String,
    after: String,
    #[serde(default)]
    presets: Vec<RegimePreset>,
}

async fn compare(State(config): State<Arc<ServiceConfig>>, body: Bytes) -> Response {
    respond((|| {
        let req: CompareRequest = parse_body(&body)?;
        let s = scenario_of(req.scenario)?;
        let lookup = |field: &str, name: &str| {
            find_preset(&req.presets, &config.presets, name).ok_or_else(|| {
                Failure::single(
                    StatusCode::UNPROCESSABLE_ENTITY,
                    "UnknownPreset",
                    field,
                    format!("no preset named {name:?}"),
                )
            })
        };
        let before = lookup("before", &req.before)?;
        let after = lookup("after", &req.after)?;
        let cmp = compare_regimes(&s, before, after).map_err(|e| Failure::model(e, "presets"))?;
        Ok(success(cmp))
    })())
}

async fn presets(State(config): State<Arc<ServiceConfig>>) -> Response {
    success(&config.presets)
}

async fn healthz() -> &'static str {
    "ok"
}

async fn not_found() -> Response {
    Failure::single(StatusCode::NOT_FOUND, "NotFound", "", "no such route").into_response()
}

pub fn router(config: ServiceConfig) -> Router {
    let cors = config.allow_origin.as_deref().and_then(|origin| {
        HeaderValue::from_str(origin).ok().map(|origin| {
            CorsLayer::new()
                .allow_origin(AllowOrigin::exact(origin))
                .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
                .allow_headers([axum::http::header::CONTENT_TYPE])
        })
    });
    let router = Router::new()
        .route("/api/v1/evaluate", post(evaluate))
        .route("/api/v1/sweep", post(sweep))
        .route("/api/v1/breakeven", post(breakeven))
        .route("/api/v1/compare", post(compare))
        .route("/api/v1/presets", get(presets))
        .route("/healthz", get(healthz))
        .fallback(not_found)
        .with_state(Arc::new(config));
    match cors {
        Some(layer) => router.layer(layer),
        None => router,
    }
}

/// Binds and serves until interrupted.
pub async fn serve(listen: &str, config: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(listen).await?;
    eprintln!("litigacost: listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(config))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
