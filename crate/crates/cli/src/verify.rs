//! `ziggu verify --n N`: every cross-module equality at one size.

use std::collections::HashSet;
use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use num_bigint::BigUint;
use ziggu_core::loopless::{CountingProbe, FastZiggu, FastZigguDirections};
use ziggu_core::nurikabe::{nurikabe_counts, reflection_check, sigma, sigma_inverse};
use ziggu_core::oracle::{
    bfs_path, build_graph, enumerate_nurikabe, geodesic_count, greedy_walk, is_hamilton_path,
    StateGraph, MAX_GRAPH_N,
};
use ziggu_core::rulers::{ruler_iter, RulerKind};
use ziggu_core::{
    apply_move, compare, count, listing, listing_iter, next, prev, rank, unrank, ListingKind,
    QuatString, Side, StepOutcome,
};

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Counts by closed form against the streamed listing lengths.
fn counts(n: usize) -> Check {
    let short = BigUint::from(6u32) * (BigUint::from(1u32) << n) - (3 * n + 5);
    let long = (BigUint::from(3u32).pow(n as u32 + 1) - 1u32) / 2u32;
    ensure!(count(ListingKind::Short, n) == short, "count(short) != 6*2^n-3n-5");
    ensure!(count(ListingKind::Long, n) == long, "count(long) != (3^(n+1)-1)/2");
    for kind in ListingKind::ALL {
        let mut it = listing_iter(kind, n).map_err(e2s)?;
        let mut c = 0u64;
        while it.advance().is_some() {
            c += 1;
        }
        ensure!(BigUint::from(c) == count(kind, n), "{kind} listing has {c} states");
    }
    Ok(())
}

/// One pass over each listing: rank, unrank, next, prev, compare and the
/// change sequence agree at every position.
fn coherence(kind: ListingKind, n: usize) -> Check {
    let mut it = listing_iter(kind, n).map_err(e2s)?;
    let ruler_kind = match kind {
        ListingKind::Brgc => RulerKind::Binary,
        ListingKind::Quat => RulerKind::Quat,
        ListingKind::Long => RulerKind::Long,
        ListingKind::Short => RulerKind::Short,
    };
    let mut changes = ruler_iter(ruler_kind, n, true).map_err(e2s)?;
    let mut before: Option<QuatString> = None;
    let mut i = 0u64;
    while let Some(d) = it.advance() {
        let q = QuatString::from_digits(d.to_vec()).map_err(e2s)?;
        let r = rank(kind, &q).map_err(e2s)?;
        ensure!(r == BigUint::from(i), "rank({q}) = {r}, expected {i}");
        ensure!(unrank(kind, n, &r).map_err(e2s)? == q, "unrank({r}) != {q}");
        match &before {
            None => ensure!(prev(kind, &q).map_err(e2s)? == StepOutcome::First, "prev of first state"),
            Some(p) => {
                ensure!(next(kind, p).map_err(e2s)?.state() == Some(&q), "next({p}) != {q}");
                ensure!(prev(kind, &q).map_err(e2s)?.state() == Some(p), "prev({q}) != {p}");
                ensure!(compare(p, &q).map_err(e2s)?.is_lt(), "compare({p}, {q}) not <");
                let e = changes.next().ok_or("change sequence too short")?;
                let m = e.as_move().ok_or("unsigned entry in signed sequence")?;
                let v = p.get(m.index) as i8 + m.delta;
                ensure!(p.with_digit(m.index, v as u8) == q, "change {e} from {p}");
                if matches!(kind, ListingKind::Long | ListingKind::Short) {
                    ensure!(apply_move(p, m).is_ok(), "{p} -> {q} is not a legal move");
                }
            }
        }
        before = Some(q);
        i += 1;
    }
    let last = before.ok_or("empty listing")?;
    ensure!(next(kind, &last).map_err(e2s)? == StepOutcome::Solved, "next of last state");
    ensure!(changes.next().is_none(), "change sequence too long");
    Ok(())
}

fn graph_checks(g: &StateGraph, n: usize) -> Check {
    let short = listing(ListingKind::Short, n).map_err(e2s)?.states;
    let long = listing(ListingKind::Long, n).map_err(e2s)?.states;
    let (s, t) = (QuatString::zeros(n), QuatString::threes(n));
    ensure!(g.is_symmetric() && g.is_connected(), "graph not symmetric and connected");
    ensure!(g.leaves() == [s.clone(), t.clone()], "degree-1 states are not 0^n and 3^n");
    ensure!(bfs_path(g, &s, &t).map_err(e2s)? == short, "BFS geodesic != shortest solution");
    ensure!(geodesic_count(g, &s, &t).map_err(e2s)? == 1, "geodesic not unique");
    ensure!(is_hamilton_path(g, &long), "longest solution is not a Hamilton path");
    ensure!(greedy_walk(g, Side::Leftmost, 1 << 24).map_err(e2s)? == short, "leftmost walk");
    ensure!(greedy_walk(g, Side::Rightmost, 1 << 24).map_err(e2s)? == long, "rightmost walk");
    Ok(())
}

fn loopless(n: usize) -> Check {
    let want = listing(ListingKind::Short, n).map_err(e2s)?.states;
    let mut a = FastZiggu::with_probe(n, CountingProbe::default()).map_err(e2s)?;
    let got: Vec<QuatString> = a.by_ref().collect();
    ensure!(got == want, "single-index generator differs");
    let mut b = FastZigguDirections::with_probe(n, CountingProbe::default()).map_err(e2s)?;
    let got: Vec<QuatString> = b.by_ref().collect();
    ensure!(got == want, "direction generator differs");
    let worst = a.probe().max_per_state.max(b.probe().max_per_state);
    ensure!(worst <= 4, "{worst} accesses for one state");
    Ok(())
}

fn nurikabe(n: usize) -> Check {
    let grids: HashSet<_> = enumerate_nurikabe(n).map_err(e2s)?.into_iter().collect();
    let (a, b, _) = nurikabe_counts(n);
    ensure!(BigUint::from(grids.len()) == a, "{} grids", grids.len());
    let black = grids.iter().filter(|g| g.all_columns_black()).count();
    ensure!(BigUint::from(black) == b, "{black} grids black in every column");
    let mut image = HashSet::new();
    for w in listing(ListingKind::Short, n).map_err(e2s)?.states {
        let g = sigma(&w).map_err(e2s)?;
        ensure!(sigma_inverse(&g).map_err(e2s)? == w, "inverse at {w}");
        ensure!(reflection_check(&w).map_err(e2s)?, "reflection at {w}");
        image.insert(g);
    }
    ensure!(image == grids, "sigma is not onto the grids");
    Ok(())
}

pub fn run(out: &mut impl Write, n: usize) -> Result<bool> {
    if n == 0 || n > MAX_GRAPH_N {
        anyhow::bail!("verify needs 1 <= n <= {MAX_GRAPH_N}");
    }
    let mut failed = 0;
    let mut report = |out: &mut dyn Write, name: &str, check: &dyn Fn() -> Check| -> Result<()> {
        let t = Instant::now();
        match check() {
            Ok(()) => writeln!(out, "PASS {name} ({:.2?})", t.elapsed())?,
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL {name}: {why}")?;
            }
        }
        out.flush()?;
        Ok(())
    };
    report(out, "counts", &|| counts(n))?;
    for kind in ListingKind::ALL {
        report(out, &format!("{kind} rank/unrank/next/prev/compare/changes"), &|| {
            coherence(kind, n)
        })?;
    }
    let g = build_graph(n)?;
    report(out, "state graph", &|| graph_checks(&g, n))?;
    report(out, "loopless generators", &|| loopless(n))?;
    if n <= 10 {
        report(out, "nurikabe bijection", &|| nurikabe(n))?;
    } else {
        writeln!(out, "SKIP nurikabe bijection (n > 10)")?;
    }
    writeln!(
        out,
        "shortest={} longest={}",
        count(ListingKind::Short, n),
        count(ListingKind::Long, n)
    )?;
    if failed == 0 {
        writeln!(out, "PASS")?;
        Ok(true)
    } else {
        writeln!(out, "FAIL ({failed} checks)")?;
        Ok(false)
    }
}
