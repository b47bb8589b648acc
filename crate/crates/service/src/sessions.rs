//! In-memory sessions with an optional directory of JSON snapshots.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use uuid::Uuid;
use ziggu_core::state::check_move;
use ziggu_core::{apply_move, Move, MoveViolation, QuatString};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Session {
    pub id: Uuid,
    pub n: usize,
    pub current: QuatString,
    pub history: Vec<Move>,
    /// Seconds since the Unix epoch.
    pub created: u64,
    pub updated: u64,
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

impl Session {
    pub fn new(n: usize) -> Session {
        let t = now();
        Session {
            id: Uuid::new_v4(),
            n,
            current: QuatString::zeros(n),
            history: Vec::new(),
            created: t,
            updated: t,
        }
    }

    pub fn apply(&mut self, mv: Move) -> Result<(), MoveViolation> {
        self.current = check_move(&self.current, mv)?;
        self.history.push(mv);
        self.updated = now();
        Ok(())
    }

    /// Reverts the last move; `None` when there is nothing to undo.
    pub fn undo(&mut self) -> Option<Move> {
        let last = self.history.pop()?;
        self.current = apply_move(&self.current, last.inverse())
            .expect("the inverse of an applied move is legal");
        self.updated = now();
        Some(last)
    }

    /// The state reached by replaying the history from the start.
    pub fn replay(&self) -> ziggu_core::Result<QuatString> {
        self.history
            .iter()
            .try_fold(QuatString::zeros(self.n), |q, &m| apply_move(&q, m))
    }
}

pub type SharedSession = Arc<Mutex<Session>>;

#[derive(Default)]
pub struct SessionStore {
    sessions: RwLock<HashMap<Uuid, SharedSession>>,
    snapshot_dir: Option<PathBuf>,
}

impl SessionStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Store backed by `dir`; existing snapshots are loaded, broken ones
    /// skipped with a warning.
    pub fn with_snapshots(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        let mut map = HashMap::new();
        for entry in fs::read_dir(&dir)? {
            let path = entry?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            match load_snapshot(&path) {
                Ok(s) => {
                    map.insert(s.id, Arc::new(Mutex::new(s)));
                }
                Err(e) => tracing::warn!("skipping snapshot {}: {e}", path.display()),
            }
        }
        tracing::info!("loaded {} sessions from {}", map.len(), dir.display());
        Ok(SessionStore {
            sessions: RwLock::new(map),
            snapshot_dir: Some(dir),
        })
    }

    pub fn create(&self, n: usize) -> io::Result<Session> {
        let s = Session::new(n);
        self.persist(&s)?;
        self.sessions
            .write()
            .unwrap()
            .insert(s.id, Arc::new(Mutex::new(s.clone())));
        Ok(s)
    }

    pub fn get(&self, id: &Uuid) -> Option<SharedSession> {
        self.sessions.read().unwrap().get(id).cloned()
    }

    pub fn len(&self) -> usize {
        self.sessions.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the session's snapshot, if snapshots are enabled.
    pub fn persist(&self, s: &Session) -> io::Result<()> {
        let Some(dir) = &self.snapshot_dir else {
            return Ok(());
        };
        let path = dir.join(format!("{}.json", s.id));
        let tmp = dir.join(format!(".{}.json.tmp", s.id));
        fs::write(&tmp, serde_json::to_vec_pretty(s)?)?;
        fs::rename(tmp, path)
    }
}

fn load_snapshot(path: &Path) -> anyhow::Result<Session> {
    let s: Session = serde_json::from_slice(&fs::read(path)?)?;
    anyhow::ensure!(s.current.len() == s.n, "state length differs from n");
    anyhow::ensure!(s.replay()? == s.current, "history does not reach the current state");
    Ok(s)
}
