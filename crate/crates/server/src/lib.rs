//! HTTP/JSON service for the congruing computations. Every operation of the
//! library is exposed as an endpoint under /v1; the CLI drives the same
//! router, either in process or over the network, so the wire format is the
//! single source of truth for machine-readable output.

use std::sync::Arc;

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use num_bigint::BigUint;
use serde::Deserialize;
use serde_json::{json, Value};

use congruing_core::bernoulli;
use congruing_core::catalog::FieldCatalog;
use congruing_core::congruing::{
    global_ext1, global_ext1_at_grading, minimal_congruing, CongruingAnswer, IntegerCasePolicy,
};
use congruing_core::equivalence::{
    arithmetically_equivalent_mod_m, cross_check_equivalences, DEFAULT_N_BOUND, DEFAULT_PRIME_BOUND,
};
use congruing_core::exact::{factor_integer, FactoredInteger};
use congruing_core::lfunction::{
    gd_inverse, gd_transform, hecke_euler, s_transform, DedekindTypeFunction, EulerDocument,
    EulerProduct,
};
use congruing_core::verify::{run_suite, Suite};
use congruing_core::Error as CoreError;

pub use congruing_core::numberfield::FieldDocument;

mod oneshot;

pub use oneshot::oneshot_blocking;

#[derive(Clone)]
pub struct AppState {
    pub catalog: Arc<FieldCatalog>,
}

impl AppState {
    pub fn new(catalog: FieldCatalog) -> Self {
        AppState {
            catalog: Arc::new(catalog),
        }
    }
}

/// Service error: a core error plus its HTTP mapping, serialized as
/// {"error": {"kind", "message", "prime"?}}.
#[derive(Debug)]
pub struct ApiError(pub CoreError);

impl From<CoreError> for ApiError {
    fn from(e: CoreError) -> Self {
        ApiError(e)
    }
}

pub fn error_body(e: &CoreError) -> Value {
    let mut obj = json!({
        "kind": e.kind(),
        "message": e.to_string(),
    });
    if let Some(p) = e.prime() {
        obj["prime"] = json!(p);
    }
    json!({ "error": obj })
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match &self.0 {
            CoreError::UnknownField(_) => StatusCode::NOT_FOUND,
            CoreError::InvalidArgument(_)
            | CoreError::Malformed(_)
            | CoreError::Precondition(_)
            | CoreError::NotApplicable(_) => StatusCode::BAD_REQUEST,
            CoreError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        (status, Json(error_body(&self.0))).into_response()
    }
}

type ApiResult = Result<Json<Value>, ApiError>;

fn parse_factored(text: &str, what: &str) -> Result<FactoredInteger, CoreError> {
    let value: BigUint = text
        .parse()
        .map_err(|_| CoreError::InvalidArgument(format!("{what} must be a positive integer")))?;
    if value == BigUint::from(0u32) {
        return Err(CoreError::InvalidArgument(format!(
            "{what} must be positive"
        )));
    }
    factor_integer(&value)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn answer_json(
    op: &str,
    n: i64,
    invert: &FactoredInteger,
    answer: &CongruingAnswer,
    expand: bool,
) -> Value {
    let mut out = json!({
        "op": op,
        "n": n,
        "invert": to_value(invert),
        "order": to_value(&answer.order),
        "group": to_value(&answer.group),
        "contributing": to_value(&answer.contributing),
        "excluded": to_value(&answer.excluded),
    });
    if expand {
        out["order_expanded"] = json!(answer.order.value().to_string());
    }
    out
}

async fn health() -> Json<Value> {
    Json(json!({ "status": "ok" }))
}

async fn list_fields(State(state): State<AppState>) -> Json<Value> {
    Json(json!({ "fields": state.catalog.names() }))
}

async fn get_field(State(state): State<AppState>, Path(name): Path<String>) -> ApiResult {
    let field = state.catalog.get(&name)?;
    Ok(Json(to_value(&field.to_document())))
}

#[derive(Deserialize)]
struct SplitParams {
    p: u64,
}

async fn split(
    State(state): State<AppState>,
    Path(name): Path<String>,
    Query(params): Query<SplitParams>,
) -> ApiResult {
    let field = state.catalog.get(&name)?;
    let splitting = field.split_prime(params.p)?;
    Ok(Json(to_value(&splitting)))
}

#[derive(Deserialize)]
struct ExpandParam {
    #[serde(default)]
    expand: bool,
}

async fn ppr_disc(
    State(state): State<AppState>,
    Path(name): Path<String>,
    Query(params): Query<ExpandParam>,
) -> ApiResult {
    let field = state.catalog.get(&name)?;
    let ppr = field.ppr_discriminant()?;
    let mut out = json!({ "value": to_value(&ppr) });
    if params.expand {
        out["expanded"] = json!(ppr.value().to_string());
    }
    Ok(Json(out))
}

#[derive(Deserialize)]
struct Ext1Params {
    n: Option<i64>,
    /// Full internal grading; odd values give the trivial group.
    grading: Option<i64>,
    invert: Option<String>,
    #[serde(default)]
    expand: bool,
    /// "error" (default) or "oracle" for the integer-case fallback.
    integer_case: Option<String>,
}

fn integer_case_policy(raw: &Option<String>) -> Result<IntegerCasePolicy, CoreError> {
    match raw.as_deref() {
        None | Some("error") => Ok(IntegerCasePolicy::Error),
        Some("oracle") => Ok(IntegerCasePolicy::Oracle),
        Some(other) => Err(CoreError::InvalidArgument(format!(
            "integer_case must be \"error\" or \"oracle\", got {other:?}"
        ))),
    }
}

fn resolve_invert(
    field: &congruing_core::numberfield::NumberFieldData,
    raw: &Option<String>,
) -> Result<FactoredInteger, CoreError> {
    match raw {
        Some(text) => parse_factored(text, "invert"),
        None => field.ppr_discriminant(),
    }
}

async fn ext1(
    State(state): State<AppState>,
    Path(name): Path<String>,
    Query(params): Query<Ext1Params>,
) -> ApiResult {
    let field = state.catalog.get(&name)?;
    let invert = resolve_invert(&field, &params.invert)?;
    let (n, answer) = match (params.n, params.grading) {
        (Some(n), None) => (n, global_ext1(&field, n, &invert)?),
        (None, Some(t)) => (t / 2, global_ext1_at_grading(&field, t, &invert)?),
        _ => {
            return Err(
                CoreError::InvalidArgument("provide exactly one of n or grading".into()).into(),
            )
        }
    };
    Ok(Json(answer_json(
        "ext1",
        n,
        &invert,
        &answer,
        params.expand,
    )))
}

async fn congruing_quotient(
    State(state): State<AppState>,
    Path(name): Path<String>,
    Query(params): Query<Ext1Params>,
) -> ApiResult {
    let field = state.catalog.get(&name)?;
    let invert = resolve_invert(&field, &params.invert)?;
    let policy = integer_case_policy(&params.integer_case)?;
    let Some(n) = params.n else {
        return Err(CoreError::InvalidArgument("n is required".into()).into());
    };
    if n <= 0 {
        return Err(CoreError::InvalidArgument("n must be >= 1 for A/J_n".into()).into());
    }
    let answer = minimal_congruing(&field, n as u64, &invert, policy)?;
    Ok(Json(answer_json(
        "congruing",
        n,
        &invert,
        &answer,
        params.expand,
    )))
}

#[derive(Deserialize)]
struct StraightenParams {
    kind: String,
    n: u64,
    conductor: Option<String>,
    #[serde(default)]
    expand: bool,
}

fn run_transform(kind: &str, product: &EulerProduct, n: u64) -> Result<FactoredInteger, CoreError> {
    match kind {
        "s" => s_transform(product, n),
        "gd" => gd_transform(product, n),
        other => Err(CoreError::InvalidArgument(format!(
            "kind must be \"s\" or \"gd\", got {other:?}"
        ))),
    }
}

async fn straighten_field(
    State(state): State<AppState>,
    Path(name): Path<String>,
    Query(params): Query<StraightenParams>,
) -> ApiResult {
    let field = state.catalog.get(&name)?;
    let conductor = match &params.conductor {
        Some(text) => parse_factored(text, "conductor")?,
        None => field.ppr_discriminant()?,
    };
    let product = hecke_euler(&field, &conductor)?;
    let value = run_transform(&params.kind, &product, params.n)?;
    let mut out = json!({ "value": to_value(&value) });
    if params.expand {
        out["expanded"] = json!(value.value().to_string());
    }
    Ok(Json(out))
}

#[derive(Deserialize)]
struct StraightenBody {
    kind: String,
    n: u64,
    euler: EulerDocument,
    #[serde(default)]
    expand: bool,
}

async fn straighten_document(
    State(state): State<AppState>,
    Json(body): Json<StraightenBody>,
) -> ApiResult {
    let catalog = Arc::clone(&state.catalog);
    let product = EulerProduct::from_document(&body.euler, move |name| catalog.get(name))?;
    let value = run_transform(&body.kind, &product, body.n)?;
    let mut out = json!({ "value": to_value(&value) });
    if body.expand {
        out["expanded"] = json!(value.value().to_string());
    }
    Ok(Json(out))
}

#[derive(Deserialize)]
struct GdInvertBody {
    /// Tabulated transform values n -> factored integer.
    values: std::collections::BTreeMap<u64, FactoredInteger>,
    bound: Option<u64>,
    primes: Vec<u64>,
}

async fn gd_invert(Json(body): Json<GdInvertBody>) -> ApiResult {
    let bound = body
        .bound
        .unwrap_or_else(|| body.values.keys().max().copied().unwrap_or(1));
    let h = DedekindTypeFunction::Table {
        values: body.values,
        search_bound: bound,
    };
    let product = gd_inverse(&h, &body.primes)?;
    Ok(Json(to_value(&product.to_document())))
}

#[derive(Deserialize)]
struct NParam {
    n: u64,
}

async fn zeta_denominator(Query(params): Query<NParam>) -> ApiResult {
    let value = bernoulli::zeta_denominator(params.n)?;
    Ok(Json(json!({ "value": to_value(&value) })))
}

async fn bernoulli_number(Query(params): Query<NParam>) -> ApiResult {
    let value = bernoulli::bernoulli(params.n)?;
    Ok(Json(to_value(&value)))
}

#[derive(Deserialize)]
struct EquivParams {
    field1: String,
    field2: String,
    #[serde(rename = "mod")]
    modulus: String,
    n_bound: Option<u64>,
    prime_bound: Option<u64>,
}

async fn equiv(State(state): State<AppState>, Query(params): Query<EquivParams>) -> ApiResult {
    let f1 = state.catalog.get(&params.field1)?;
    let f2 = state.catalog.get(&params.field2)?;
    let m = parse_factored(&params.modulus, "mod")?;
    let prime_bound = params.prime_bound.unwrap_or(DEFAULT_PRIME_BOUND);
    let n_bound = params.n_bound.unwrap_or(DEFAULT_N_BOUND);
    let report = tokio::task::spawn_blocking(move || -> Result<Value, CoreError> {
        let euler = arithmetically_equivalent_mod_m(&f1, &f2, &m, prime_bound)?;
        let cross = cross_check_equivalences(&f1, &f2, &m, n_bound, prime_bound)?;
        let mut out = to_value(&euler);
        out["cross_check"] = to_value(&cross);
        Ok(out)
    })
    .await
    .map_err(|e| CoreError::Internal(format!("join error: {e}")))??;
    Ok(Json(report))
}

#[derive(Deserialize)]
struct VerifyBody {
    suite: String,
}

async fn verify_suite(Json(body): Json<VerifyBody>) -> ApiResult {
    let suite = Suite::parse(&body.suite)?;
    let report = tokio::task::spawn_blocking(move || run_suite(suite))
        .await
        .map_err(|e| CoreError::Internal(format!("join error: {e}")))??;
    let mut out = to_value(&report);
    out["ok"] = json!(report.all_passed());
    Ok(Json(out))
}

/// The complete /v1 routing table.
pub fn build_router(state: AppState) -> Router {
    Router::new()
        .route("/v1/health", get(health))
        .route("/v1/fields", get(list_fields))
        .route("/v1/fields/{name}", get(get_field))
        .route("/v1/fields/{name}/split", get(split))
        .route("/v1/fields/{name}/ppr-disc", get(ppr_disc))
        .route("/v1/fields/{name}/ext1", get(ext1))
        .route("/v1/fields/{name}/congruing", get(congruing_quotient))
        .route("/v1/fields/{name}/straighten", get(straighten_field))
        .route("/v1/straighten", post(straighten_document))
        .route("/v1/gd-invert", post(gd_invert))
        .route("/v1/zeta-denominator", get(zeta_denominator))
        .route("/v1/bernoulli", get(bernoulli_number))
        .route("/v1/equiv", get(equiv))
        .route("/v1/verify", post(verify_suite))
        .with_state(state)
}

/// Catalog assembly shared by the server binary and the CLI: built-in fleet
/// plus documents loaded from an optional path (CONGRUING_CATALOG), loaded
/// entries shadowing built-ins of the same name.
pub fn assemble_catalog(path: Option<&std::path::Path>) -> Result<FieldCatalog, CoreError> {
    let mut catalog = FieldCatalog::builtin();
    if let Some(path) = path {
        catalog.load_path(path)?;
    }
    Ok(catalog)
}
