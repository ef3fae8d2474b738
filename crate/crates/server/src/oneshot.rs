//! In-process request driver: the CLI sends its requests through the same
//! Router the network server uses, over a current-thread runtime, so local
//! and remote invocations share one wire format.

use axum::body::Body;
use axum::http::{header, Method, Request};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::Value;
use tower::ServiceExt;

/// Drive one request through the router and return (status, JSON body).
pub fn oneshot_blocking(
    router: Router,
    method: &str,
    uri: &str,
    body: Option<&Value>,
) -> Result<(u16, Value), String> {
    let runtime = tokio::runtime::Builder::new_current_thread()
        .enable_all()
        .build()
        .map_err(|e| format!("runtime: {e}"))?;
    runtime.block_on(async move {
        let method: Method = method.parse().map_err(|e| format!("method: {e}"))?;
        let request = match body {
            Some(value) => Request::builder()
                .method(method)
                .uri(uri)
                .header(header::CONTENT_TYPE, "application/json")
                .body(Body::from(value.to_string())),
            None => Request::builder()
                .method(method)
                .uri(uri)
                .body(Body::empty()),
        }
        .map_err(|e| format!("request: {e}"))?;
        let response = router
            .oneshot(request)
            .await
            .map_err(|e| format!("service: {e}"))?;
        let status = response.status().as_u16();
        let bytes = response
            .into_body()
            .collect()
            .await
            .map_err(|e| format!("body: {e}"))?
            .to_bytes();
        let value: Value = if bytes.is_empty() {
            Value::Null
        } else {
            serde_json::from_slice(&bytes).map_err(|e| format!("json: {e}"))?
        };
        Ok((status, value))
    })
}
