use std::collections::{HashMap, VecDeque};

use axum::body::Body;
use axum::http::{header, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};
use tower::ServiceExt;
use ziggu_core::{apply_move, legal_moves, listing_iter, ListingKind, Move, QuatString};
use ziggu_service::sessions::{Session, SessionStore};
use ziggu_service::{router, AppState};

fn app() -> Router {
    router(AppState::new(SessionStore::new()), None)
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(v) => {
            req = req.header(header::CONTENT_TYPE, "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let resp = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let v = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    (status, v)
}

async fn get(app: &Router, uri: &str) -> (StatusCode, Value) {
    call(app, "GET", uri, None).await
}

async fn post(app: &Router, uri: &str, body: Value) -> (StatusCode, Value) {
    call(app, "POST", uri, Some(body)).await
}

async fn new_session(app: &Router, n: usize) -> String {
    let (status, v) = post(app, "/api/v1/session", json!({ "n": n })).await;
    assert_eq!(status, StatusCode::CREATED, "{v}");
    v["id"].as_str().unwrap().to_owned()
}

async fn play(app: &Router, id: &str, index: usize, delta: i8) -> (StatusCode, Value) {
    let uri = format!("/api/v1/session/{id}/move");
    post(app, &uri, json!({ "index": index, "delta": delta })).await
}

#[tokio::test]
async fn state_report() {
    let app = app();
    let (status, v) = get(&app, "/api/v1/puzzle/3/state/103").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["ranks"], json!({ "quat": 28, "long": 22, "short": 22 }));
    assert_eq!(v["remaining_shortest"], 11);
    assert_eq!(v["ziggu"], true);
    assert_eq!(v["solved"], false);
    assert_eq!(v["hint_shortest"], json!({ "index": 3, "delta": 1 }));

    let (_, v) = get(&app, "/api/v1/puzzle/3/state/000").await;
    assert_eq!(v["legal_moves"], json!([{ "index": 1, "delta": 1 }]));
    assert_eq!(v["solved"], false);
    assert_eq!(v["remaining_shortest"], 33);

    let (_, v) = get(&app, "/api/v1/puzzle/3/state/333").await;
    assert_eq!(v["solved"], true);
    assert_eq!(v["hint_shortest"], Value::Null);
    assert_eq!(v["hint_unavailable"], false);
    assert_eq!(v["distance_bfs"], 0);
}

#[tokio::test]
async fn off_path_states_get_graph_hints() {
    let app = app();
    let (status, v) = get(&app, "/api/v1/puzzle/3/state/102").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["ziggu"], false);
    assert_eq!(v["ranks"]["short"], Value::Null);
    assert_eq!(v["remaining_shortest"], Value::Null);
    assert!(v["hint_shortest"].is_object());
    let d = v["distance_bfs"].as_u64().unwrap();
    let (_, next) = get(
        &app,
        &format!("/api/v1/puzzle/3/state/{}", step("102", &v["hint_shortest"])),
    )
    .await;
    assert_eq!(next["distance_bfs"].as_u64(), Some(d - 1));
}

#[tokio::test]
async fn big_states_have_exact_ranks() {
    let app = app();
    let s = "3".repeat(40);
    let uri = format!("/api/v1/puzzle/40/state/{s}");
    let resp = app.clone().oneshot(Request::get(&uri).body(Body::empty()).unwrap()).await.unwrap();
    let text = String::from_utf8(resp.into_body().collect().await.unwrap().to_bytes().to_vec()).unwrap();
    // the solved state closes both solutions
    let last = |kind| ziggu_core::count(kind, 40) - 1u32;
    assert!(text.contains(&format!("\"long\":{},", last(ListingKind::Long))));
    assert!(text.contains(&format!("\"short\":{}}}", last(ListingKind::Short))));
    let (status, v) = get(&app, &uri).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["remaining_shortest"], 0);
    assert_eq!(v["distance_bfs"], Value::Null);
}

#[tokio::test]
async fn bad_states() {
    let app = app();
    let (status, v) = get(&app, "/api/v1/puzzle/3/state/130").await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert!(v["error"].as_str().unwrap().contains("130"));
    assert!(v["rule"].is_string());
    assert_eq!(get(&app, "/api/v1/puzzle/3/state/1x3").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&app, "/api/v1/puzzle/4/state/103").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&app, "/api/v1/puzzle/three/state/103").await.0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&app, "/api/v1/nothing").await.0, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn session_lifecycle() {
    let app = app();
    let (status, v) = post(&app, "/api/v1/session", json!({ "n": 5 })).await;
    assert_eq!(status, StatusCode::CREATED);
    assert_eq!(v["current"], "00000");
    assert_eq!(v["history"], json!([]));
    assert_eq!(v["report"]["state"], "00000");
    let id = v["id"].as_str().unwrap();

    let (status, v) = play(&app, id, 1, 1).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["state"], "00001");

    let (_, v) = get(&app, &format!("/api/v1/session/{id}")).await;
    assert_eq!(v["current"], "00001");
    assert_eq!(v["history"], json!([{ "index": 1, "delta": 1 }]));

    let (status, v) = post(&app, &format!("/api/v1/session/{id}/undo"), json!({})).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["state"], "00000");
    let (status, _) = post(&app, &format!("/api/v1/session/{id}/undo"), json!({})).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn illegal_moves_are_refused() {
    let app = app();
    let id = new_session(&app, 5).await;
    for m in path_to("10203") {
        assert_eq!(play(&app, &id, m.index, m.delta).await.0, StatusCode::OK);
    }
    let (status, v) = play(&app, &id, 4, 1).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(v["code"], "maze_turn");
    assert!(v["reason"].is_string());
    let (_, s) = get(&app, &format!("/api/v1/session/{id}")).await;
    assert_eq!(s["current"], "10203");
    let blocked = s["report"]["blocked_moves"].as_array().unwrap();
    assert!(blocked.iter().any(|b| b["index"] == 4 && b["delta"] == 1));

    assert_eq!(play(&app, &id, 9, 1).await.0, StatusCode::CONFLICT);
    assert_eq!(play(&app, &id, 1, 2).await.0, StatusCode::BAD_REQUEST);
    let uri = format!("/api/v1/session/{id}/move");
    assert_eq!(post(&app, &uri, json!({ "index": "one" })).await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn unknown_sessions() {
    let app = app();
    let missing = uuid::Uuid::new_v4();
    assert_eq!(get(&app, &format!("/api/v1/session/{missing}")).await.0, StatusCode::NOT_FOUND);
    assert_eq!(play(&app, &missing.to_string(), 1, 1).await.0, StatusCode::NOT_FOUND);
    assert_eq!(get(&app, "/api/v1/session/not-a-uuid").await.0, StatusCode::NOT_FOUND);
    assert_eq!(post(&app, "/api/v1/session", json!({ "n": 0 })).await.0, StatusCode::BAD_REQUEST);
    assert_eq!(post(&app, "/api/v1/session", json!({ "n": 10_000 })).await.0, StatusCode::BAD_REQUEST);
    assert_eq!(post(&app, "/api/v1/session", json!("five")).await.0, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn random_play_keeps_states_valid() {
    let app = app();
    let id = new_session(&app, 6).await;
    let mut rng = StdRng::seed_from_u64(7);
    let mut q = QuatString::zeros(6);
    for _ in 0..2_000 {
        let moves = legal_moves(&q).unwrap();
        let m = *moves.choose(&mut rng).unwrap();
        let (status, v) = play(&app, &id, m.index, m.delta).await;
        assert_eq!(status, StatusCode::OK);
        q = v["state"].as_str().unwrap().parse().unwrap();
        assert!(q.is_valid());
    }
    let (_, v) = get(&app, &format!("/api/v1/session/{id}")).await;
    let s: Session = serde_json::from_value(v).unwrap();
    assert_eq!(s.replay().unwrap(), s.current);
    assert_eq!(s.current, q);
}

#[test]
fn session_fuzz_direct() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut s = Session::new(6);
    for _ in 0..10_000 {
        let moves = legal_moves(&s.current).unwrap();
        if rand::Rng::gen_bool(&mut rng, 0.2) && !s.history.is_empty() {
            s.undo().unwrap();
        } else {
            s.apply(*moves.choose(&mut rng).unwrap()).unwrap();
        }
        assert!(s.current.is_valid());
    }
    assert_eq!(s.replay().unwrap(), s.current);
}

#[tokio::test]
async fn hints_follow_the_shortest_solution() {
    let app = app();
    let states: Vec<QuatString> = listing_iter(ListingKind::Short, 6).unwrap().collect();
    for w in states.windows(2) {
        let (_, v) = get(&app, &format!("/api/v1/puzzle/6/state/{}", w[0])).await;
        assert_eq!(step(&w[0].to_string(), &v["hint_shortest"]), w[1].to_string());
    }
}

#[tokio::test]
async fn snapshots_survive_restart() {
    let dir = tempfile::tempdir().unwrap();
    let app = router(AppState::new(SessionStore::with_snapshots(dir.path()).unwrap()), None);
    let id = new_session(&app, 4).await;
    play(&app, &id, 1, 1).await;
    play(&app, &id, 1, 1).await;
    std::fs::write(dir.path().join("junk.json"), "{").unwrap();

    let store = SessionStore::with_snapshots(dir.path()).unwrap();
    assert_eq!(store.len(), 1);
    let again = router(AppState::new(store), None);
    let (status, v) = get(&again, &format!("/api/v1/session/{id}")).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["current"], "0002");
    assert_eq!(v["history"].as_array().unwrap().len(), 2);
}

#[tokio::test]
async fn static_files_and_cors() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("index.html"), "<h1>ziggu</h1>").unwrap();
    let app = router(AppState::new(SessionStore::new()), Some(dir.path().to_owned()));
    let resp = app
        .clone()
        .oneshot(Request::get("/").body(Body::empty()).unwrap())
        .await
        .unwrap();
    assert_eq!(resp.status(), StatusCode::OK);
    let body = resp.into_body().collect().await.unwrap().to_bytes();
    assert_eq!(&body[..], b"<h1>ziggu</h1>");

    let req = |origin: &str| {
        Request::get("/api/v1/puzzle/1/state/0")
            .header(header::ORIGIN, origin)
            .body(Body::empty())
            .unwrap()
    };
    let resp = app.clone().oneshot(req("http://localhost:5173")).await.unwrap();
    assert_eq!(resp.headers()[header::ACCESS_CONTROL_ALLOW_ORIGIN], "http://localhost:5173");
    let resp = app.oneshot(req("http://localhost.evil.com")).await.unwrap();
    assert!(resp.headers().get(header::ACCESS_CONTROL_ALLOW_ORIGIN).is_none());
}

/// Moves leading from the start to `target`, by breadth-first search.
fn path_to(target: &str) -> Vec<Move> {
    let target: QuatString = target.parse().unwrap();
    let start = QuatString::zeros(target.len());
    let mut parent: HashMap<QuatString, (QuatString, Move)> = HashMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(q) = queue.pop_front() {
        if q == target {
            break;
        }
        for m in legal_moves(&q).unwrap() {
            let r = apply_move(&q, m).unwrap();
            if r != start && !parent.contains_key(&r) {
                parent.insert(r.clone(), (q.clone(), m));
                queue.push_back(r);
            }
        }
    }
    let mut moves = Vec::new();
    let mut q = target;
    while q != start {
        let (p, m) = parent[&q].clone();
        moves.push(m);
        q = p;
    }
    moves.reverse();
    moves
}

/// Applies a JSON move to a state string.
fn step(state: &str, mv: &Value) -> String {
    let index = mv["index"].as_u64().unwrap() as usize;
    let delta = mv["delta"].as_i64().unwrap();
    let mut digits: Vec<u8> = state.bytes().collect();
    let pos = digits.len() - index;
    digits[pos] = (digits[pos] as i64 + delta) as u8;
    String::from_utf8(digits).unwrap()
}
