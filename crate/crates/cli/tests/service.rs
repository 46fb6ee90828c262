use axum::body::Body;
use axum::http::{Request, StatusCode};
use litigacost::service::{router, ServiceConfig};
use serde_json::{json, Value};
use tower::ServiceExt;

fn hypothesis(confirmation: &str) -> Value {
    json!({
        "id": "h",
        "currency": "EUR",
        "claim": "100000.00",
        "confirmation": confirmation,
        "plaintiff_trial_cost": "9000.00",
        "defendant_trial_cost": "9000.00",
        "plaintiff_settle_cost": "9000.00",
        "defendant_settle_cost": "9000.00",
        "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 1, "ka": 0, "t_short": 0}
    })
}

async fn call(method: &str, uri: &str, body: Option<String>) -> (StatusCode, Value) {
    let request = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map(Body::from).unwrap_or_else(Body::empty))
        .unwrap();
    let response = router(ServiceConfig::default())
        .oneshot(request)
        .await
        .unwrap();
    let status = response.status();
    let bytes = axum::body::to_bytes(response.into_body(), usize::MAX)
        .await
        .unwrap();
    let value = serde_json::from_slice(&bytes)
        .unwrap_or_else(|_| Value::String(String::from_utf8_lossy(&bytes).into()));
    (status, value)
}

async fn post(uri: &str, body: Value) -> (StatusCode, Value) {
    call("POST", uri, Some(body.to_string())).await
}

#[tokio::test]
async fn evaluate_hypotheses() {
    let (status, v) = post("/api/v1/evaluate", json!({"scenario": hypothesis("0.8")})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["ok"], true);
    assert_eq!(v["errors"], json!([]));
    assert_eq!(v["result"]["tc"], "4000.00");
    assert_eq!(v["result"]["risk_coefficient"], 2);
    assert_eq!(v["result"]["plaintiff_action"], "Litigate");

    let (_, v) = post("/api/v1/evaluate", json!({"scenario": hypothesis("0.5")})).await;
    assert_eq!(v["result"]["tc_fraction_of_claim"], "0.6400");
    assert_eq!(v["result"]["plaintiff_action"], "ProposeSettlement");
}

#[tokio::test]
async fn request_policy_overrides_default() {
    let body =
        json!({"scenario": hypothesis("0.8"), "policy": {"plaintiff_settle_threshold": "0.03"}});
    let (_, v) = post("/api/v1/evaluate", body).await;
    assert_eq!(v["result"]["plaintiff_action"], "ProposeSettlement");
    let body =
        json!({"scenario": hypothesis("0.8"), "policy": {"plaintiff_settle_threshold": "3"}});
    let (status, v) = post("/api/v1/evaluate", body).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["errors"][0]["code"], "InvalidPolicy");
}

#[tokio::test]
async fn out_of_range_confirmation_is_422() {
    let (status, v) = post("/api/v1/evaluate", json!({"scenario": hypothesis("1.5")})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["ok"], false);
    assert_eq!(v["result"], Value::Null);
    assert_eq!(v["errors"][0]["field_path"], "confirmation");
    assert_eq!(v["errors"][0]["code"], "FractionOutOfRange");
}

#[tokio::test]
async fn malformed_json_is_400() {
    let (status, v) = call("POST", "/api/v1/evaluate", Some("{nope".into())).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["errors"][0]["code"], "MalformedJson");
}

#[tokio::test]
async fn wrong_shape_is_422_with_path() {
    let mut s = hypothesis("0.8");
    s["indicators"]["z"] = json!(7);
    let (status, v) = post("/api/v1/evaluate", json!({"scenario": s})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["errors"][0]["field_path"], "indicators.z");
    let (status, v) = post("/api/v1/evaluate", json!({"scenarios": []})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["errors"][0]["code"], "SchemaViolation");
}

#[tokio::test]
async fn all_validation_errors_reported() {
    let mut s = hypothesis("0.8");
    s["claim"] = json!("0");
    s["indicators"]["ka"] = json!(1);
    s["plaintiff_trial_cost"] = json!("-1.00");
    let (status, v) = post("/api/v1/evaluate", json!({"scenario": s})).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    let paths: Vec<_> = v["errors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["field_path"].as_str().unwrap().to_string())
        .collect();
    assert!(paths.contains(&"claim".to_string()));
    assert!(paths.contains(&"indicators".to_string()));
    assert!(paths.contains(&"plaintiff_trial_cost".to_string()));
}

#[tokio::test]
async fn sweep_breakeven_compare() {
    let (status, v) = post(
        "/api/v1/sweep",
        json!({"scenario": hypothesis("0.8"), "min": "0.5", "max": "0.8", "steps": 2}),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    let points = v["result"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    assert_eq!(points[0]["tc"], "64000.00");
    assert_eq!(points[1]["tc"], "4000.00");

    let (status, v) = post(
        "/api/v1/sweep",
        json!({"scenario": hypothesis("0.8"), "min": "0.5", "max": "0.5", "steps": 2}),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["errors"][0]["code"], "InvalidRange");

    let (_, v) = post(
        "/api/v1/breakeven",
        json!({"scenario": hypothesis("0.8"), "target_fraction": "0.04"}),
    )
    .await;
    assert_eq!(v["result"], "0.8000");
    let (status, v) = post(
        "/api/v1/breakeven",
        json!({"scenario": hypothesis("0.8"), "target_fraction": "2"}),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["errors"][0]["code"], "NoSolution");

    let (_, v) = post(
        "/api/v1/compare",
        json!({"scenario": hypothesis("0.8"), "before": "BG-pre-reform", "after": "BG-pre-reform"}),
    )
    .await;
    assert_eq!(v["result"]["verdict"], "ReformIneffective");
    assert_eq!(v["result"]["delta"], "0.00");

    let (_, v) = post(
        "/api/v1/compare",
        json!({"scenario": hypothesis("0.8"), "before": "BG-pre-reform", "after": "reformed"}),
    )
    .await;
    assert_eq!(v["result"]["delta"], "-10000.00");
    assert_eq!(v["result"]["verdict"], "ReformEffective");

    let (status, v) = post(
        "/api/v1/compare",
        json!({"scenario": hypothesis("0.8"), "before": "BG-pre-reform", "after": "utopia"}),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(v["errors"][0]["field_path"], "after");
}

#[tokio::test]
async fn presets_health_and_unknown_routes() {
    let (status, v) = call("GET", "/api/v1/presets", None).await;
    assert_eq!(status, StatusCode::OK);
    let pre = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["name"] == "BG-pre-reform")
        .unwrap();
    assert_eq!(pre["indicators"]["z"], 1);
    assert!(v["result"]
        .as_array()
        .unwrap()
        .iter()
        .any(|p| p["name"] == "reformed"));

    let (status, v) = call("GET", "/healthz", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v, Value::String("ok".into()));

    let (status, v) = call("GET", "/nowhere", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["ok"], false);
    let (status, _) = post("/evaluate", json!({"scenario": hypothesis("0.8")})).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn cors_only_when_configured() {
    let config = ServiceConfig {
        allow_origin: Some("http://localhost:8000".into()),
        ..ServiceConfig::default()
    };
    let request = Request::builder()
        .method("OPTIONS")
        .uri("/api/v1/evaluate")
        .header("origin", "http://localhost:8000")
        .header("access-control-request-method", "POST")
        .body(Body::empty())
        .unwrap();
    let response = router(config).oneshot(request).await.unwrap();
    assert_eq!(
        response
            .headers()
            .get("access-control-allow-origin")
            .unwrap(),
        "http://localhost:8000"
    );

    let request = Request::builder()
        .uri("/healthz")
        .header("origin", "http://localhost:8000")
        .body(Body::empty())
        .unwrap();
    let response = router(ServiceConfig::default())
        .oneshot(request)
        .await
        .unwrap();
    assert!(response
        .headers()
        .get("access-control-allow-origin")
        .is_none());
}

#[tokio::test]
async fn responses_do_not_depend_on_request_order() {
    let bodies = [
        ("/api/v1/evaluate", json!({"scenario": hypothesis("0.8")})),
        ("/api/v1/evaluate", json!({"scenario": hypothesis("0.5")})),
        (
            "/api/v1/breakeven",
            json!({"scenario": hypothesis("0.8"), "target_fraction": "0.1"}),
        ),
    ];
    let mut forward = Vec::new();
    for (uri, body) in &bodies {
        forward.push(post(uri, body.clone()).await);
    }
    let mut backward = Vec::new();
    for (uri, body) in bodies.iter().rev() {
        backward.push(post(uri, body.clone()).await);
    }
    backward.reverse();
    assert_eq!(forward, backward);
}
