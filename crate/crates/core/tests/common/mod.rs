//! Independent reference implementations used by the integration tests.
//!
//! Everything here works on plain `String`s and recomputes from definitions,
//! sharing no code with the library.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use ziggu_core::ListingKind;

/// `[012]*3*`
pub fn is_valid_str(s: &str) -> bool {
    let t = s.trim_start_matches(['0', '1', '2']);
    t.chars().all(|c| c == '3')
}

/// `0*[12]*0?3*`
pub fn is_ziggu_str(s: &str) -> bool {
    let t = s.trim_start_matches('0');
    let t = t.trim_start_matches(['1', '2']);
    let t = t.strip_prefix('0').unwrap_or(t);
    t.chars().all(|c| c == '3')
}

fn prefixed(d: char, list: &[String], rev: bool) -> Vec<String> {
    let mut out: Vec<String> = list.iter().map(|s| format!("{d}{s}")).collect();
    if rev {
        out.reverse();
    }
    out
}

/// Reflected Gray code in base 2 or 4, built by literal prefixing.
pub fn reflected(n: usize, base: u8) -> Vec<String> {
    let mut cur = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for d in 0..base {
            let c = char::from(b'0' + d);
            next.extend(prefixed(c, &cur, d % 2 == 1));
        }
        cur = next;
    }
    cur
}

/// The longest solution by its recursion.
pub fn long_rec(n: usize) -> Vec<String> {
    if n == 1 {
        return ["0", "1", "2", "3"].map(String::from).to_vec();
    }
    let p = long_rec(n - 1);
    let mut out = prefixed('0', &p, false);
    out.extend(prefixed('1', &p, true));
    out.extend(prefixed('2', &p, false));
    out.push("3".repeat(n));
    out
}

fn core_rec(n: usize) -> Vec<String> {
    if n == 1 {
        return ["0", "1", "2", "3"].map(String::from).to_vec();
    }
    let c = core_rec(n - 1);
    let mut out = vec![format!("0{}", "3".repeat(n - 1))];
    out.extend(prefixed('1', &c, true));
    out.extend(prefixed('2', &c, false));
    out.push("3".repeat(n));
    out
}

/// The shortest solution by its recursion.
pub fn short_rec(n: usize) -> Vec<String> {
    if n == 1 {
        return ["0", "1", "2", "3"].map(String::from).to_vec();
    }
    let s = short_rec(n - 1);
    let c = core_rec(n - 1);
    let mut out = prefixed('0', &s, false);
    out.extend(prefixed('1', &c, true));
    out.extend(prefixed('2', &c, false));
    out.push("3".repeat(n));
    out
}

pub fn reference_listing(kind: ListingKind, n: usize) -> Vec<String> {
    match kind {
        ListingKind::Brgc => reflected(n, 2),
        ListingKind::Quat => reflected(n, 4),
        ListingKind::Long => long_rec(n),
        ListingKind::Short => short_rec(n),
    }
}

pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

/// Legal moves straight from the maze picture: digit `i` may turn iff the
/// result is a valid state and, for each maze the digit sits in, the path
/// between the two cells is open. Maze `(r, c)` (r = left digit, c = right
/// digit) is a zig-zag: row r runs horizontally between columns 0..3, and
/// rows are joined at column 3 when r is even, column 0 when r is odd.
pub fn brute_neighbors(s: &str) -> Vec<String> {
    let d: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
    let n = d.len();
    let mut out = Vec::new();
    for p in 0..n {
        for delta in [-1i8, 1] {
            let v = d[p] as i8 + delta;
            if !(0..=3).contains(&v) {
                continue;
            }
            let mut e = d.clone();
            e[p] = v as u8;
            let t: String = e.iter().map(|&x| char::from(b'0' + x)).collect();
            if !is_valid_str(&t) {
                continue;
            }
            // as the column of the maze to its left, digit p slides along row d[p-1]
            // freely. As the row of the maze to its right, it can switch rows only
            // at the column where the zig-zag joins them.
            let ok = if p + 1 < n {
                let lo = d[p].min(v as u8);
                let join = if lo.is_multiple_of(2) { 3 } else { 0 };
                d[p + 1] == join
            } else {
                true
            };
            if ok {
                out.push(t);
            }
        }
    }
    out
}

/// Breadth-first distances over all valid strings of length `n`.
pub fn brute_graph(n: usize) -> HashMap<String, Vec<String>> {
    let mut g = HashMap::new();
    for s in reflected(n, 4) {
        if is_valid_str(&s) {
            let nb = brute_neighbors(&s);
            g.insert(s, nb);
        }
    }
    g
}

pub fn bfs_dist(g: &HashMap<String, Vec<String>>, from: &str) -> HashMap<String, usize> {
    let mut dist = HashMap::new();
    dist.insert(from.to_string(), 0);
    let mut q = VecDeque::from([from.to_string()]);
    while let Some(u) = q.pop_front() {
        let du = dist[&u];
        for v in &g[&u] {
            if !dist.contains_key(v) {
                dist.insert(v.clone(), du + 1);
                q.push_back(v.clone());
            }
        }
    }
    dist
}

/// Black cells 4-connected and no 2 x 2 black block, by flood fill.
pub fn grid_ok(top: &[bool], bottom: &[bool]) -> bool {
    let n = top.len();
    for j in 0..n.saturating_sub(1) {
        if top[j] && top[j + 1] && bottom[j] && bottom[j + 1] {
            return false;
        }
    }
    let cell = |r: usize, c: usize| if r == 0 { top[c] } else { bottom[c] };
    let blacks: Vec<(usize, usize)> = (0..2)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| cell(r, c))
        .collect();
    let Some(&first) = blacks.first() else {
        return true;
    };
    let mut seen = vec![first];
    let mut stack = vec![first];
    while let Some((r, c)) = stack.pop() {
        let mut nb = vec![(1 - r, c)];
        if c > 0 {
            nb.push((r, c - 1));
        }
        if c + 1 < n {
            nb.push((r, c + 1));
        }
        for (r2, c2) in nb {
            if cell(r2, c2) && !seen.contains(&(r2, c2)) {
                seen.push((r2, c2));
                stack.push((r2, c2));
            }
        }
    }
    seen.len() == blacks.len()
}

/// Number of valid grids of width `n` by brute force.
pub fn grid_count(n: usize) -> usize {
    (0..1u32 << (2 * n))
        .filter(|&m| {
            let top: Vec<bool> = (0..n).map(|j| m >> (2 * j) & 1 == 1).collect();
            let bottom: Vec<bool> = (0..n).map(|j| m >> (2 * j + 1) & 1 == 1).collect();
            grid_ok(&top, &bottom)
        })
        .count()
}
