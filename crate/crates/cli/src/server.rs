//! JSON-over-HTTP transliteration service.
//!
//! `POST /api/transliterate` takes `{"text", "from", "to", "normalize"?}`
//! and answers `{"result"}`; `GET /health` reports the lexicon size. One
//! immutable [`Transliterator`] is shared by every request.

use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;
use tokio::net::TcpListener;
use uztranslit::{AlphabetId, TranslitOptions, Transliterator};

/// Largest accepted `text` field, in bytes.
pub const DEFAULT_MAX_TEXT_BYTES: usize = 1 << 20;

// Room for the JSON envelope and escapes around a maximal text.
const BODY_OVERHEAD: usize = 64 * 1024;

#[derive(Debug, Deserialize)]
pub struct TranslitRequest {
    pub text: String,
    pub from: String,
    pub to: String,
    #[serde(default = "default_normalize")]
    pub normalize: bool,
}

fn default_normalize() -> bool {
    true
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TranslitResponse {
    pub result: String,
}

#[derive(Clone)]
struct AppState {
    transliterator: Arc<Transliterator>,
    max_text_bytes: usize,
}

fn error(status: StatusCode, message: impl Into<String>) -> Response {
    (status, Json(json!({ "error": message.into() }))).into_response()
}

async fn transliterate(State(state): State<AppState>, body: Bytes) -> Response {
    let request: TranslitRequest = match serde_json::from_slice(&body) {
        Ok(r) => r,
        Err(e) => return error(StatusCode::BAD_REQUEST, format!("invalid request: {e}")),
    };
    if request.text.len() > state.max_text_bytes {
        return error(
            StatusCode::PAYLOAD_TOO_LARGE,
            format!("text exceeds {} bytes", state.max_text_bytes),
        );
    }
    let (from, to) = match (request.from.parse::<AlphabetId>(), request.to.parse::<AlphabetId>()) {
        (Ok(f), Ok(t)) => (f, t),
        (Err(e), _) | (_, Err(e)) => return error(StatusCode::BAD_REQUEST, e.to_string()),
    };
    let mut options = TranslitOptions::new(from, to);
    options.normalize_apostrophes = request.normalize;
    let result = state.transliterator.transliterate(&request.text, options);
    Json(TranslitResponse { result }).into_response()
}

async fn health(State(state): State<AppState>) -> Response {
    Json(json!({
        "status": "ok",
        "lexicon_entries": state.transliterator.lexicon().len(),
    }))
    .into_response()
}

pub fn router(transliterator: Arc<Transliterator>) -> Router {
    router_with_limit(transliterator, DEFAULT_MAX_TEXT_BYTES)
}

pub fn router_with_limit(transliterator: Arc<Transliterator>, max_text_bytes: usize) -> Router {
    let state = AppState {
        transliterator,
        max_text_bytes,
    };
    Router::new()
        .route("/api/transliterate", post(transliterate))
        .route("/health", get(health))
        .layer(DefaultBodyLimit::max(max_text_bytes + BODY_OVERHEAD))
        .with_state(state)
}

/// Serves on an already bound listener until the process is stopped.
pub async fn serve(listener: TcpListener, transliterator: Arc<Transliterator>) -> std::io::Result<()> {
    axum::serve(listener, router(transliterator)).await
}
