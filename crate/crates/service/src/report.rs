//! The state report: ranks, progress, legal moves and hints for one state.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::value::RawValue;
use ziggu_core::oracle::{build_graph, StateGraph, MAX_GRAPH_N};
use ziggu_core::state::check_move;
use ziggu_core::{count, legal_moves, next, rank, ListingKind, Move, MoveViolation, QuatString};

/// Breadth-first distances to the solved state, built once per size.
pub struct DistanceCache {
    tables: Vec<OnceLock<Arc<DistanceTable>>>,
}

pub struct DistanceTable {
    graph: StateGraph,
    to_solved: Vec<u32>,
}

impl DistanceTable {
    fn build(n: usize) -> DistanceTable {
        let graph = build_graph(n).expect("size checked by the cache");
        let to_solved = graph
            .distances(&QuatString::threes(n))
            .expect("solved state is a vertex");
        DistanceTable { graph, to_solved }
    }

    pub fn distance(&self, q: &QuatString) -> Option<u32> {
        self.graph.vertex(q).map(|v| self.to_solved[v])
    }

    /// First legal move (in index order) that gets one step closer.
    pub fn geodesic_move(&self, q: &QuatString, moves: &[Move]) -> Option<Move> {
        let d = self.distance(q)?;
        moves.iter().copied().find(|&m| {
            let v = q.get(m.index) as i8 + m.delta;
            self.distance(&q.with_digit(m.index, v as u8)) == Some(d.wrapping_sub(1))
        })
    }
}

impl Default for DistanceCache {
    fn default() -> Self {
        DistanceCache {
            tables: (0..=MAX_GRAPH_N).map(|_| OnceLock::new()).collect(),
        }
    }
}

impl DistanceCache {
    /// Table for size `n`, or `None` above the graph limit.
    pub fn get(&self, n: usize) -> Option<Arc<DistanceTable>> {
        let cell = self.tables.get(n).filter(|_| n >= 1)?;
        Some(cell.get_or_init(|| Arc::new(DistanceTable::build(n))).clone())
    }
}

/// A big integer written as a JSON number.
pub fn json_number(n: &BigUint) -> Box<RawValue> {
    RawValue::from_string(n.to_string()).expect("decimal digits are valid JSON")
}

#[derive(Debug, Serialize)]
pub struct Ranks {
    pub quat: Box<RawValue>,
    pub long: Box<RawValue>,
    pub short: Option<Box<RawValue>>,
}

#[derive(Debug, Serialize)]
pub struct BlockedMove {
    pub index: usize,
    pub delta: i8,
    pub code: &'static str,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct StateReport {
    pub state: QuatString,
    pub n: usize,
    pub valid: bool,
    pub ziggu: bool,
    pub solved: bool,
    pub ranks: Ranks,
    pub remaining_shortest: Option<Box<RawValue>>,
    pub legal_moves: Vec<Move>,
    /// Turns that stay inside the dial range but are refused, with the reason.
    pub blocked_moves: Vec<BlockedMove>,
    pub hint_shortest: Option<Move>,
    pub hint_longest: Option<Move>,
    pub distance_bfs: Option<u32>,
    pub hint_unavailable: bool,
}

/// Report for a valid state.
pub fn report(q: &QuatString, cache: &DistanceCache) -> ziggu_core::Result<StateReport> {
    q.require_valid()?;
    let n = q.len();
    let ziggu = q.is_ziggu();
    let solved = q.is_solved();
    let moves = legal_moves(q)?;

    let short_rank = if ziggu {
        Some(rank(ListingKind::Short, q)?)
    } else {
        None
    };
    let remaining = short_rank
        .as_ref()
        .map(|r| count(ListingKind::Short, n) - 1u32 - r);

    let table = cache.get(n);
    let distance_bfs = table.as_ref().and_then(|t| t.distance(q));
    let hint_shortest = if solved {
        None
    } else if ziggu {
        next(ListingKind::Short, q)?.mv()
    } else {
        table.as_ref().and_then(|t| t.geodesic_move(q, &moves))
    };
    let hint_longest = next(ListingKind::Long, q)?.mv();

    let mut blocked_moves = Vec::new();
    for index in 1..=n {
        for delta in [1i8, -1] {
            match check_move(q, Move::new(index, delta)) {
                Ok(_) | Err(MoveViolation::DigitBound) => {}
                Err(v) => blocked_moves.push(BlockedMove {
                    index,
                    delta,
                    code: v.code(),
                    reason: v.to_string(),
                }),
            }
        }
    }

    Ok(StateReport {
        state: q.clone(),
        n,
        valid: true,
        ziggu,
        solved,
        ranks: Ranks {
            quat: json_number(&rank(ListingKind::Quat, q)?),
            long: json_number(&rank(ListingKind::Long, q)?),
            short: short_rank.as_ref().map(json_number),
        },
        remaining_shortest: remaining.as_ref().map(json_number),
        legal_moves: moves,
        blocked_moves,
        hint_shortest,
        hint_longest,
        distance_bfs,
        hint_unavailable: !solved && hint_shortest.is_none(),
    })
}
