//! HTTP API for playing Ziggu puzzles: state inspection, sessions with move
//! and undo, hints along the shortest and longest solutions.
//!
//! All routes live under `/api/v1`; everything else is served from an
//! optional static directory.

use std::path::PathBuf;
use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::{HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tower_http::cors::{AllowOrigin, Any, CorsLayer};
use tower_http::services::ServeDir;
use uuid::Uuid;
use ziggu_core::{Move, MoveViolation, QuatString, ZigguError};

pub mod report;
pub mod sessions;

use report::{DistanceCache, StateReport};
use sessions::{Session, SessionStore};

/// Largest puzzle a session may have.
pub const MAX_SESSION_N: usize = 256;

pub struct AppState {
    pub sessions: SessionStore,
    pub distances: DistanceCache,
}

impl AppState {
    pub fn new(sessions: SessionStore) -> Arc<Self> {
        Arc::new(AppState {
            sessions,
            distances: DistanceCache::default(),
        })
    }
}

type Shared = Arc<AppState>;

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: serde_json::Value,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            body: json!({ "error": message.into() }),
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, message)
    }

    fn unknown_session() -> Self {
        Self::new(StatusCode::NOT_FOUND, "unknown session")
    }

    fn illegal_move(state: &QuatString, mv: Move, v: MoveViolation) -> Self {
        let status = match v {
            MoveViolation::BadDelta => StatusCode::BAD_REQUEST,
            _ => StatusCode::CONFLICT,
        };
        ApiError {
            status,
            body: json!({
                "error": format!("illegal move {mv} at {state}"),
                "code": v.code(),
                "reason": v.to_string(),
            }),
        }
    }

    fn internal(e: impl std::fmt::Display) -> Self {
        Self::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string())
    }
}

impl From<ZigguError> for ApiError {
    fn from(e: ZigguError) -> Self {
        match e {
            ZigguError::InvalidState { rule, .. } => ApiError {
                status: StatusCode::NOT_FOUND,
                body: json!({ "error": e.to_string(), "rule": rule }),
            },
            ZigguError::IllegalMove { .. } => Self::new(StatusCode::CONFLICT, e.to_string()),
            _ => Self::bad_request(e.to_string()),
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        Self::bad_request(e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

/// Reports can build a state graph on first use; keep that off the
/// async workers.
async fn build_report(app: &Shared, q: QuatString) -> Result<StateReport, ApiError> {
    let app = app.clone();
    tokio::task::spawn_blocking(move || report::report(&q, &app.distances))
        .await
        .map_err(ApiError::internal)?
        .map_err(ApiError::from)
}

async fn puzzle_state(
    State(app): State<Shared>,
    Path((n, digits)): Path<(String, String)>,
) -> ApiResult<StateReport> {
    let n: usize = n
        .parse()
        .map_err(|_| ApiError::bad_request(format!("puzzle size {n:?} is not a number")))?;
    let q: QuatString = digits.parse()?;
    if q.len() != n {
        return Err(ApiError::bad_request(format!(
            "state {q} has {} digits, puzzle has {n}",
            q.len()
        )));
    }
    Ok(Json(build_report(&app, q).await?))
}

#[derive(Debug, Deserialize)]
struct CreateSession {
    n: usize,
}

#[derive(Debug, Serialize)]
pub struct SessionView {
    #[serde(flatten)]
    session: Session,
    report: StateReport,
}

async fn view(app: &Shared, session: Session) -> ApiResult<SessionView> {
    let report = build_report(app, session.current.clone()).await?;
    Ok(Json(SessionView { session, report }))
}

fn parse_id(id: &str) -> Result<Uuid, ApiError> {
    Uuid::parse_str(id).map_err(|_| ApiError::unknown_session())
}

async fn create_session(
    State(app): State<Shared>,
    body: Result<Json<CreateSession>, JsonRejection>,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let Json(req) = body?;
    if req.n == 0 || req.n > MAX_SESSION_N {
        return Err(ApiError::bad_request(format!(
            "n must be in 1..={MAX_SESSION_N}"
        )));
    }
    let s = app.sessions.create(req.n).map_err(ApiError::internal)?;
    tracing::debug!(id = %s.id, n = s.n, "session created");
    Ok((StatusCode::CREATED, view(&app, s).await?))
}

async fn get_session(State(app): State<Shared>, Path(id): Path<String>) -> ApiResult<SessionView> {
    let shared = app.sessions.get(&parse_id(&id)?).ok_or_else(ApiError::unknown_session)?;
    let s = shared.lock().unwrap().clone();
    view(&app, s).await
}

async fn move_session(
    State(app): State<Shared>,
    Path(id): Path<String>,
    body: Result<Json<Move>, JsonRejection>,
) -> ApiResult<StateReport> {
    let id = parse_id(&id)?;
    let Json(mv) = body?;
    let shared = app.sessions.get(&id).ok_or_else(ApiError::unknown_session)?;
    let current = {
        let mut s = shared.lock().unwrap();
        let before = s.current.clone();
        s.apply(mv).map_err(|v| ApiError::illegal_move(&before, mv, v))?;
        app.sessions.persist(&s).map_err(ApiError::internal)?;
        s.current.clone()
    };
    Ok(Json(build_report(&app, current).await?))
}

async fn undo_session(State(app): State<Shared>, Path(id): Path<String>) -> ApiResult<StateReport> {
    let id = parse_id(&id)?;
    let shared = app.sessions.get(&id).ok_or_else(ApiError::unknown_session)?;
    let current = {
        let mut s = shared.lock().unwrap();
        if s.undo().is_none() {
            return Err(ApiError::new(StatusCode::CONFLICT, "nothing to undo"));
        }
        app.sessions.persist(&s).map_err(ApiError::internal)?;
        s.current.clone()
    };
    Ok(Json(build_report(&app, current).await?))
}

async fn api_not_found() -> ApiError {
    ApiError::new(StatusCode::NOT_FOUND, "no such endpoint")
}

async fn no_ui() -> &'static str {
    "ziggu service: the JSON API is under /api/v1\n"
}

/// Browsers on the local machine may call the API from any port.
fn cors() -> CorsLayer {
    CorsLayer::new()
        .allow_origin(AllowOrigin::predicate(|origin: &HeaderValue, _| {
            let o = origin.as_bytes();
            ["http://localhost", "http://127.0.0.1", "http://[::1]"]
                .iter()
                .any(|p| o.starts_with(p.as_bytes()) && matches!(o.get(p.len()), None | Some(b':')))
        }))
        .allow_methods(Any)
        .allow_headers(Any)
}

/// The application. `static_dir`, when given, is served for every path
/// outside the API.
pub fn router(app: Shared, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/puzzle/{n}/state/{digits}", get(puzzle_state))
        .route("/session", post(create_session))
        .route("/session/{id}", get(get_session))
        .route("/session/{id}/move", post(move_session))
        .route("/session/{id}/undo", post(undo_session))
        .fallback(api_not_found);
    let router = Router::new().nest("/api/v1", api);
    let router = match static_dir {
        Some(dir) => router.fallback_service(ServeDir::new(dir).append_index_html_on_directories(true)),
        None => router.route("/", get(no_ui)),
    };
    router.layer(cors()).with_state(app)
}
