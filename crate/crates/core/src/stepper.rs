//! Successor and predecessor rules, the order comparison, and greedy
//! non-reversing walks.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::codes::ListingKind;
use crate::error::{Result, ZigguError};
use crate::state::{legal_moves, EditChecker, Move, Pattern, QuatString};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum StepOutcome {
    Step { state: QuatString, mv: Move },
    /// `next` at the last state of a listing.
    Solved,
    /// `prev` at the first state of a listing.
    First,
}

impl StepOutcome {
    pub fn state(&self) -> Option<&QuatString> {
        match self {
            StepOutcome::Step { state, .. } => Some(state),
            _ => None,
        }
    }

    pub fn mv(&self) -> Option<Move> {
        match self {
            StepOutcome::Step { mv, .. } => Some(*mv),
            _ => None,
        }
    }
}

/// Successor of `q` in the listing of `kind`.
///
/// Scanning from the right, digit `i` changes at the first position where it
/// can move in the direction given by the parity of the digits to its left
/// (even: up, odd: down). In the longest solution a digit may not go down when
/// the digit to its left is 3; in the shortest solution additionally a 3 may not
/// go down when the digit to its left is 0.
///
/// The rule is context free, so for the shortest solution it is also defined
/// on valid states off the solution (as in `20103 -> 20203`).
pub fn next(kind: ListingKind, q: &QuatString) -> Result<StepOutcome> {
    require_domain(kind, q)?;
    let n = q.len();
    let max = kind.max_digit();
    let d = q.digits();
    // parity of the sum of everything left of position i, updated right to left
    let mut left: u32 = d.iter().map(|&x| x as u32).sum();
    for i in 1..=n {
        let qi = d[n - i];
        left -= qi as u32;
        let upper = if i < n { Some(d[n - i - 1]) } else { None };
        if left.is_multiple_of(2) {
            if qi < max {
                return Ok(step(q, i, 1));
            }
        } else if qi > 0 {
            let blocked = match kind {
                ListingKind::Long => upper == Some(3),
                ListingKind::Short => upper == Some(3) || (upper == Some(0) && qi == 3),
                _ => false,
            };
            if !blocked {
                return Ok(step(q, i, -1));
            }
        }
    }
    Ok(StepOutcome::Solved)
}

fn require_domain(kind: ListingKind, q: &QuatString) -> Result<()> {
    match kind {
        ListingKind::Short => q.require_valid(),
        _ => kind.require(q),
    }
}

/// Predecessor of `q`; inverse of [`next`]. `First` when no state steps to `q`.
pub fn prev(kind: ListingKind, q: &QuatString) -> Result<StepOutcome> {
    require_domain(kind, q)?;
    if kind == ListingKind::Short && !q.is_ziggu() {
        return prev_off_path(q);
    }
    let n = q.len();
    let max = kind.max_digit();
    let d = q.digits();
    let checker = match kind {
        ListingKind::Long => Some(EditChecker::new(Pattern::Valid, d)),
        ListingKind::Short => Some(EditChecker::new(Pattern::Ziggu, d)),
        _ => None,
    };
    let mut left: u32 = d.iter().map(|&x| x as u32).sum();
    for i in 1..=n {
        let p = n - i;
        let qi = d[p];
        left -= qi as u32;
        let delta: i8 = if left.is_multiple_of(2) {
            if qi == 0 {
                continue;
            }
            -1
        } else {
            if qi == max {
                continue;
            }
            1
        };
        let v = (qi as i8 + delta) as u8;
        if checker.as_ref().is_none_or(|c| c.accepts_with(p, v)) {
            return Ok(step(q, i, delta));
        }
    }
    Ok(StepOutcome::First)
}

/// Predecessor under the shortest-solution rule for a valid state that is not
/// on the shortest solution. Off the solution the rule is not injective
/// (`20103` and `20202` both step to `20203`); the candidate changed at the
/// highest index wins. O(n^2).
fn prev_off_path(q: &QuatString) -> Result<StepOutcome> {
    let n = q.len();
    for i in (1..=n).rev() {
        let qi = q.get(i);
        let delta: i8 = if q.left_sum(i).is_multiple_of(2) { -1 } else { 1 };
        let v = qi as i8 + delta;
        if !(0..=3).contains(&v) {
            continue;
        }
        let cand = q.with_digit(i, v as u8);
        if !cand.is_valid() {
            continue;
        }
        if next(ListingKind::Short, &cand)?.state() == Some(q) {
            return Ok(step(q, i, delta));
        }
    }
    Ok(StepOutcome::First)
}

fn step(q: &QuatString, i: usize, delta: i8) -> StepOutcome {
    let v = (q.get(i) as i8 + delta) as u8;
    StepOutcome::Step {
        state: q.with_digit(i, v),
        mv: Move::new(i, delta),
    }
}

/// Position of `w` relative to `v` in the quaternary reflected Gray code
/// (and therefore in every sub-list of it).
pub fn compare(w: &QuatString, v: &QuatString) -> Result<Ordering> {
    if w.len() != v.len() {
        return Err(ZigguError::LengthMismatch {
            left: w.len(),
            right: v.len(),
        });
    }
    let mut left = 0u32;
    for (&a, &b) in w.digits().iter().zip(v.digits()) {
        if a != b {
            let ord = a.cmp(&b);
            return Ok(if left.is_multiple_of(2) { ord } else { ord.reverse() });
        }
        left += a as u32;
    }
    Ok(Ordering::Equal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Highest digit index first (the piece furthest from the free dial).
    Leftmost,
    Rightmost,
}

/// Picks between candidate moves: extremal index by side, and at equal index
/// the direction given by the left-sum parity.
pub(crate) fn pick_greedy(
    q: &QuatString,
    candidates: impl IntoIterator<Item = Move>,
    side: Side,
) -> Option<Move> {
    let mut best: Option<Move> = None;
    for m in candidates {
        best = match best {
            None => Some(m),
            Some(b) if b.index == m.index => {
                let up = q.left_sum(m.index).is_multiple_of(2);
                let preferred = if up { 1 } else { -1 };
                Some(if m.delta == preferred { m } else { b })
            }
            Some(b) => {
                let better = match side {
                    Side::Leftmost => m.index > b.index,
                    Side::Rightmost => m.index < b.index,
                };
                Some(if better { m } else { b })
            }
        };
    }
    best
}

/// The extremal legal move that does not undo `last`, or `None` at a dead end.
pub fn greedy_step(q: &QuatString, last: Option<Move>, side: Side) -> Result<Option<Move>> {
    let moves = legal_moves(q)?;
    let undo = last.map(Move::inverse);
    Ok(pick_greedy(
        q,
        moves.into_iter().filter(|&m| Some(m) != undo),
        side,
    ))
}

/// Greedy walk from `start` until the solved state, a dead end, or `budget`
/// moves.
pub fn greedy_walk(start: &QuatString, side: Side, budget: usize) -> Result<Vec<QuatString>> {
    start.require_valid()?;
    let mut cur = start.clone();
    let mut last = None;
    let mut path = vec![cur.clone()];
    while !cur.is_solved() {
        if path.len() > budget {
            return Err(ZigguError::BudgetExhausted(budget));
        }
        let Some(m) = greedy_step(&cur, last, side)? else {
            break;
        };
        cur = crate::state::apply_move(&cur, m)?;
        last = Some(m);
        path.push(cur.clone());
    }
    Ok(path)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    /// Follow the shortest solution (state must lie on it).
    Shortest,
    /// Follow the longest solution.
    Longest,
    /// Breadth-first geodesic from any valid state, `n <= 12`.
    Bfs,
}

/// Moves from `q` to the solved state.
pub fn solve_path(q: &QuatString, mode: SolveMode) -> Result<Vec<Move>> {
    match mode {
        SolveMode::Shortest => follow(ListingKind::Short, q),
        SolveMode::Longest => follow(ListingKind::Long, q),
        SolveMode::Bfs => {
            q.require_valid()?;
            let g = crate::oracle::build_graph(q.len())?;
            let states = crate::oracle::bfs_path(&g, q, &QuatString::threes(q.len()))?;
            Ok(states
                .windows(2)
                .map(|w| diff_move(&w[0], &w[1]))
                .collect())
        }
    }
}

fn follow(kind: ListingKind, q: &QuatString) -> Result<Vec<Move>> {
    kind.require(q)?;
    let mut cur = q.clone();
    let mut out = Vec::new();
    while let StepOutcome::Step { state, mv } = next(kind, &cur)? {
        out.push(mv);
        cur = state;
    }
    Ok(out)
}

/// The unit move turning `a` into `b`; they must differ in one digit by one.
pub(crate) fn diff_move(a: &QuatString, b: &QuatString) -> Move {
    let n = a.len();
    let p = (0..n)
        .find(|&p| a.digits()[p] != b.digits()[p])
        .expect("states differ");
    Move::new(n - p, b.digits()[p] as i8 - a.digits()[p] as i8)
}
