//! Brute-force ground truth over the full state graph. Only the move model of
//! [`crate::state`] is used here, so the graph is an independent witness for
//! the listings, successor rules and rankings.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{out_of_range, Result, ZigguError};
use crate::nurikabe::{Column, NurikabeGrid};
use crate::state::{legal_moves, Move, QuatString};
use crate::stepper::Side;

pub const MAX_GRAPH_N: usize = 12;
pub const MAX_NURIKABE_N: usize = 12;
pub const MAX_HAMILTON_N: usize = 4;

#[derive(Debug, Clone)]
pub struct StateGraph {
    n: usize,
    states: Vec<QuatString>,
    index: HashMap<u32, u32>,
    adj: Vec<Vec<(u32, Move)>>,
}

fn code(q: &QuatString) -> u32 {
    q.digits().iter().fold(0, |c, &d| c * 4 + d as u32)
}

/// All strings of the form `{0,1,2}^j 3^(n-j)`, sorted.
fn valid_strings(n: usize) -> Vec<QuatString> {
    let mut out = Vec::new();
    for j in 0..=n {
        for x in 0..3u32.pow(j as u32) {
            let mut d = vec![3u8; n];
            let mut rest = x;
            for p in (0..j).rev() {
                d[p] = (rest % 3) as u8;
                rest /= 3;
            }
            out.push(QuatString::from_digits_unchecked(d));
        }
    }
    out.sort();
    out
}

pub fn build_graph(n: usize) -> Result<StateGraph> {
    if n == 0 || n > MAX_GRAPH_N {
        return Err(out_of_range("n", n, format!("1..={MAX_GRAPH_N}")));
    }
    let states = valid_strings(n);
    let index: HashMap<u32, u32> = states
        .iter()
        .enumerate()
        .map(|(v, q)| (code(q), v as u32))
        .collect();
    let mut adj = Vec::with_capacity(states.len());
    for q in &states {
        let mut out = Vec::new();
        for m in legal_moves(q)? {
            let t = crate::state::apply_move(q, m)?;
            out.push((index[&code(&t)], m));
        }
        adj.push(out);
    }
    Ok(StateGraph {
        n,
        states,
        index,
        adj,
    })
}

impl StateGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[QuatString] {
        &self.states
    }

    pub fn vertex(&self, q: &QuatString) -> Option<usize> {
        if q.len() != self.n {
            return None;
        }
        self.index.get(&code(q)).map(|&v| v as usize)
    }

    fn require(&self, q: &QuatString) -> Result<usize> {
        self.vertex(q)
            .ok_or_else(|| q.invalid("membership in the state graph"))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Move)> + '_ {
        self.adj[v].iter().map(|&(u, m)| (u as usize, m))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|v| {
            self.neighbors(v)
                .all(|(u, m)| self.neighbors(u).any(|(w, back)| w == v && back == m.inverse()))
        })
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(|&d| d != u32::MAX)
    }

    /// Vertices with exactly one neighbour.
    pub fn leaves(&self) -> Vec<QuatString> {
        (0..self.len())
            .filter(|&v| self.degree(v) == 1)
            .map(|v| self.states[v].clone())
            .collect()
    }

    /// Largest degree and every state attaining it.
    pub fn max_degree(&self) -> (usize, Vec<QuatString>) {
        let max = (0..self.len()).map(|v| self.degree(v)).max().unwrap_or(0);
        let who = (0..self.len())
            .filter(|&v| self.degree(v) == max)
            .map(|v| self.states[v].clone())
            .collect();
        (max, who)
    }

    fn distances_from(&self, from: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        let mut queue = VecDeque::new();
        dist[from] = 0;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for (u, _) in self.neighbors(v) {
                if dist[u] == u32::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Breadth-first distance of every vertex from `q`, indexed like
    /// [`StateGraph::states`].
    pub fn distances(&self, q: &QuatString) -> Result<Vec<u32>> {
        Ok(self.distances_from(self.require(q)?))
    }
}

/// A shortest path between two states.
pub fn bfs_path(g: &StateGraph, from: &QuatString, to: &QuatString) -> Result<Vec<QuatString>> {
    let s = g.require(from)?;
    let t = g.require(to)?;
    let dist = g.distances_from(t);
    let mut path = vec![from.clone()];
    let mut v = s;
    while v != t {
        let next = g
            .neighbors(v)
            .map(|(u, _)| u)
            .find(|&u| dist[u] + 1 == dist[v])
            .expect("graph is connected");
        path.push(g.states[next].clone());
        v = next;
    }
    Ok(path)
}

/// Number of distinct shortest paths between two states (saturating).
pub fn geodesic_count(g: &StateGraph, from: &QuatString, to: &QuatString) -> Result<u128> {
    let s = g.require(from)?;
    let t = g.require(to)?;
    let dist = g.distances_from(s);
    let mut order: Vec<usize> = (0..g.len()).filter(|&v| dist[v] <= dist[t]).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut ways = vec![0u128; g.len()];
    ways[s] = 1;
    for v in order {
        if v == s {
            continue;
        }
        ways[v] = g
            .neighbors(v)
            .filter(|&(u, _)| dist[u] != u32::MAX && dist[u] + 1 == dist[v])
            .fold(0u128, |acc, (u, _)| acc.saturating_add(ways[u]));
    }
    Ok(ways[t])
}

/// Does `states` visit every vertex exactly once, stepping along edges?
pub fn is_hamilton_path(g: &StateGraph, states: &[QuatString]) -> bool {
    if states.len() != g.len() {
        return false;
    }
    let mut seen = vec![false; g.len()];
    let mut prev: Option<usize> = None;
    for q in states {
        let Some(v) = g.vertex(q) else {
            return false;
        };
        if seen[v] {
            return false;
        }
        seen[v] = true;
        if let Some(p) = prev {
            if !g.neighbors(p).any(|(u, _)| u == v) {
                return false;
            }
        }
        prev = Some(v);
    }
    true
}

/// Number of Hamilton paths starting at `start`, by exhaustive backtracking.
pub fn count_hamilton_paths(g: &StateGraph, start: &QuatString) -> Result<u64> {
    if g.n > MAX_HAMILTON_N {
        return Err(out_of_range("n", g.n, format!("1..={MAX_HAMILTON_N}")));
    }
    let s = g.require(start)?;
    let mut seen = vec![false; g.len()];
    seen[s] = true;
    Ok(hamilton_dfs(g, s, 1, &mut seen))
}

fn hamilton_dfs(g: &StateGraph, v: usize, depth: usize, seen: &mut [bool]) -> u64 {
    if depth == g.len() {
        return 1;
    }
    let mut total = 0;
    for (u, _) in g.neighbors(v) {
        if !seen[u] {
            seen[u] = true;
            total += hamilton_dfs(g, u, depth + 1, seen);
            seen[u] = false;
        }
    }
    total
}

/// Walk from `0^n` always taking the extremal legal move that does not undo
/// the previous one. Ties at one index go up iff the digits to the left have
/// even sum.
pub fn greedy_walk(g: &StateGraph, side: Side, budget: usize) -> Result<Vec<QuatString>> {
    let start = g.require(&QuatString::zeros(g.n))?;
    let goal = g.require(&QuatString::threes(g.n))?;
    let mut path = vec![g.states[start].clone()];
    let mut v = start;
    let mut last: Option<Move> = None;
    while v != goal {
        if path.len() > budget {
            return Err(ZigguError::BudgetExhausted(budget));
        }
        let q = &g.states[v];
        let mut best: Option<(usize, Move)> = None;
        for (u, m) in g.neighbors(v) {
            if last.map(Move::inverse) == Some(m) {
                continue;
            }
            best = match best {
                None => Some((u, m)),
                Some((bu, bm)) if bm.index == m.index => {
                    let up = q.left_sum(m.index).is_multiple_of(2);
                    if (m.delta == 1) == up {
                        Some((u, m))
                    } else {
                        Some((bu, bm))
                    }
                }
                Some((bu, bm)) => {
                    let better = match side {
                        Side::Leftmost => m.index > bm.index,
                        Side::Rightmost => m.index < bm.index,
                    };
                    if better {
                        Some((u, m))
                    } else {
                        Some((bu, bm))
                    }
                }
            };
        }
        let Some((u, m)) = best else {
            break;
        };
        path.push(g.states[u].clone());
        v = u;
        last = Some(m);
    }
    Ok(path)
}

/// Every valid 2 x n grid, by filtering all `4^n` column sequences.
pub fn enumerate_nurikabe(n: usize) -> Result<Vec<NurikabeGrid>> {
    if n > MAX_NURIKABE_N {
        return Err(out_of_range("n", n, format!("0..={MAX_NURIKABE_N}")));
    }
    let mut out = Vec::new();
    let mut cols = vec![0usize; n];
    loop {
        let g = NurikabeGrid::new(cols.iter().map(|&c| Column::ALL[c]).collect());
        if g.is_valid() {
            out.push(g);
        }
        let mut p = n;
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            cols[p] += 1;
            if cols[p] < 4 {
                break;
            }
            cols[p] = 0;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphExport {
    pub n: usize,
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeExport {
    pub state: QuatString,
    pub short: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeExport {
    pub from: QuatString,
    pub to: QuatString,
    pub idx: usize,
}

/// Node and edge lists; each undirected edge once, smaller endpoint first.
pub fn export(g: &StateGraph) -> GraphExport {
    let nodes = g
        .states
        .iter()
        .map(|q| NodeExport {
            state: q.clone(),
            short: q.is_ziggu(),
        })
        .collect();
    let mut edges = Vec::with_capacity(g.edge_count());
    for v in 0..g.len() {
        for (u, m) in g.neighbors(v) {
            if v < u {
                edges.push(EdgeExport {
                    from: g.states[v].clone(),
                    to: g.states[u].clone(),
                    idx: m.index,
                });
            }
        }
    }
    GraphExport {
        n: g.n,
        nodes,
        edges,
    }
}

pub fn to_dot(g: &StateGraph) -> String {
    let e = export(g);
    let mut out = format!("graph ziggu{} {{\n", e.n);
    for node in &e.nodes {
        if node.short {
            let _ = writeln!(out, "  \"{0}\" [label=\"{0}\", short=1];", node.state);
        } else {
            let _ = writeln!(out, "  \"{0}\" [label=\"{0}\"];", node.state);
        }
    }
    for edge in &e.edges {
        let _ = writeln!(out, "  \"{}\" -- \"{}\" [idx={}];", edge.from, edge.to, edge.idx);
    }
    out.push_str("}\n");
    out
}
