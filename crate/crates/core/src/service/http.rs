use std::future::Future;
use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::json;
use tokio::net::TcpListener;

use super::state::{GameService, ServiceError};

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let (status, code) = match &self {
            ServiceError::Unavailable | ServiceError::NotStarted { .. } => {
                (StatusCode::SERVICE_UNAVAILABLE, "unavailable")
            }
            ServiceError::UnknownToken => (StatusCode::NOT_FOUND, "unknown-token"),
            ServiceError::Finished => (StatusCode::CONFLICT, "session-finished"),
            ServiceError::NotFinished => (StatusCode::CONFLICT, "session-in-progress"),
            ServiceError::Log(e) => {
                tracing::error!("session log write failed: {e}");
                (StatusCode::INTERNAL_SERVER_ERROR, "log-error")
            }
        };
        (status, Json(json!({ "error": code, "message": self.to_string() }))).into_response()
    }
}

#[derive(Debug, Default, Deserialize)]
struct NewSession {
    client_id: Option<String>,
}

#[derive(Debug, Deserialize)]
struct GuessBody {
    guess: String,
}

type AppState = Arc<GameService>;

async fn today(State(svc): State<AppState>) -> Result<Response, ServiceError> {
    Ok(Json(svc.today()?).into_response())
}

async fn create_session(State(svc): State<AppState>, body: Option<Json<NewSession>>) -> Result<Response, ServiceError> {
    let client_id = body.and_then(|Json(b)| b.client_id);
    let token = svc.create_session(client_id)?;
    Ok(Json(json!({ "token": token })).into_response())
}

async fn guess(
    State(svc): State<AppState>,
    Path(token): Path<String>,
    Json(body): Json<GuessBody>,
) -> Result<Response, ServiceError> {
    let reply = svc.submit_guess(&token, &body.guess)?;
    let status = if reply.is_malformed() {
        StatusCode::UNPROCESSABLE_ENTITY
    } else {
        StatusCode::OK
    };
    Ok((status, Json(reply)).into_response())
}

async fn finalize(State(svc): State<AppState>, Path(token): Path<String>) -> Result<Response, ServiceError> {
    // the log append syncs to disk; keep it off the async workers
    let reply = tokio::task::spawn_blocking(move || svc.finalize(&token))
        .await
        .map_err(|e| ServiceError::Log(std::io::Error::other(e)))??;
    Ok(Json(reply).into_response())
}

async fn stats(State(svc): State<AppState>, Path(puzzle_id): Path<u32>) -> Result<Response, ServiceError> {
    Ok(Json(svc.stats(puzzle_id)?).into_response())
}

pub fn router(service: Arc<GameService>) -> Router {
    Router::new()
        .route("/api/puzzle/today", get(today))
        .route("/api/session", post(create_session))
        .route("/api/session/{token}/guess", post(guess))
        .route("/api/session/{token}/finalize", post(finalize))
        .route("/api/stats/{puzzle_id}", get(stats))
        .with_state(service)
}

/// Serves the API on `listener` until `shutdown` resolves, then syncs the log.
pub async fn serve(
    listener: TcpListener,
    service: Arc<GameService>,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, router(Arc::clone(&service)))
        .with_graceful_shutdown(shutdown)
        .await?;
    service.log().flush()
}

/// Resolves on Ctrl-C or SIGTERM.
pub async fn shutdown_signal() {
    let ctrl_c = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    #[cfg(unix)]
    let terminate = async {
        match tokio::signal::unix::signal(tokio::signal::unix::SignalKind::terminate()) {
            Ok(mut s) => {
                s.recv().await;
            }
            Err(_) => std::future::pending::<()>().await,
        }
    };
    #[cfg(not(unix))]
    let terminate = std::future::pending::<()>();
    tokio::select! {
        _ = ctrl_c => {},
        _ = terminate => {},
    }
}
