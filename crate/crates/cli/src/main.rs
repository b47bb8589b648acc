use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::value::RawValue;
use ziggu_core::nurikabe::{nurikabe_counts, sigma, sigma_inverse, NurikabeGrid};
use ziggu_core::oracle::{build_graph, enumerate_nurikabe, export, to_dot};
use ziggu_core::stepper::solve_path;
use ziggu_core::{
    apply_move, compare, count, legal_moves, listing_iter, next, prev, rank, unrank, ListingKind,
    Move, QuatString, SolveMode, StepOutcome,
};

mod verify;

#[derive(Parser)]
#[command(name = "ziggu", version, about = "Ziggu puzzle listings, ranks and solutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Brgc,
    Quat,
    Long,
    Short,
}

impl From<Kind> for ListingKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Brgc => ListingKind::Brgc,
            Kind::Quat => ListingKind::Quat,
            Kind::Long => ListingKind::Long,
            Kind::Short => ListingKind::Short,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Shortest,
    Longest,
    Bfs,
}

impl From<Mode> for SolveMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Shortest => SolveMode::Shortest,
            Mode::Longest => SolveMode::Longest,
            Mode::Bfs => SolveMode::Bfs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a listing, one state per line.
    List {
        #[arg(long, value_enum, default_value = "short")]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Position of each state in a listing. Reads states from stdin when none are given.
    Rank {
        #[arg(long, value_enum, default_value = "short")]
        kind: Kind,
        states: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// State at a position of a listing.
    Unrank {
        #[arg(long, value_enum, default_value = "short")]
        kind: Kind,
        #[arg(long)]
        n: usize,
        rank: String,
    },
    /// Successor in a listing.
    Next {
        #[arg(long, value_enum, default_value = "short")]
        kind: Kind,
        state: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Predecessor in a listing.
    Prev {
        #[arg(long, value_enum, default_value = "short")]
        kind: Kind,
        state: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Order of two states in the quaternary Gray code: prints <, = or >.
    Compare { a: String, b: String },
    /// Moves to the solved state as a signed change sequence.
    Solve {
        #[arg(long, value_enum, default_value = "shortest")]
        mode: Mode,
        /// Also print every intermediate state.
        #[arg(long)]
        states: bool,
        state: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Legal moves from a state.
    Moves {
        state: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the state graph.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// 2 x n Nurikabe grids.
    Nurikabe {
        #[command(subcommand)]
        command: NurikabeCommand,
    },
    /// Recompute the cross-checks between all modules at one size.
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum NurikabeCommand {
    /// Number of grids: all, black in every column, with an all-white column.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Grid of a shortest-solution state.
    Map {
        state: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// State of a grid given as its top and bottom rows of '#' and '.'.
    Unmap { top: String, bottom: String },
    /// Every grid of width n.
    Grids {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A big integer written as a JSON number.
fn big(n: &BigUint) -> Box<RawValue> {
    RawValue::from_string(n.to_string()).expect("decimal digits are valid JSON")
}

fn state(text: &str) -> Result<QuatString> {
    Ok(text.trim().parse::<QuatString>()?)
}

fn json_line<T: Serialize + ?Sized>(out: &mut impl Write, v: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn usage_error(msg: &str) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::ArgumentConflict, msg)
        .exit()
}

fn text_or_json(format: Format) -> bool {
    match format {
        Format::Dot => usage_error("--format dot is only available for `graph`"),
        Format::Json => true,
        Format::Text => false,
    }
}

fn list(out: &mut impl Write, kind: ListingKind, n: usize, json: bool) -> Result<()> {
    let mut it = listing_iter(kind, n)?;
    if json {
        write!(out, "{{\"kind\":\"{kind}\",\"n\":{n},\"count\":{},\"states\":[", count(kind, n))?;
    }
    let mut first = true;
    while let Some(d) = it.advance() {
        let text: String = d.iter().map(|&x| char::from(b'0' + x)).collect();
        if json {
            if !first {
                out.write_all(b",")?;
            }
            write!(out, "\"{text}\"")?;
        } else {
            writeln!(out, "{text}")?;
        }
        first = false;
    }
    if json {
        writeln!(out, "]}}")?;
    }
    Ok(())
}

fn rank_states(out: &mut impl Write, kind: ListingKind, states: Vec<String>, json: bool) -> Result<()> {
    #[derive(Serialize)]
    struct Ranked<'a> {
        kind: ListingKind,
        state: &'a QuatString,
        rank: Box<RawValue>,
    }
    let mut one = |text: &str| -> Result<()> {
        let q = state(text)?;
        let r = rank(kind, &q)?;
        if json {
            json_line(out, &Ranked { kind, state: &q, rank: big(&r) })
        } else {
            writeln!(out, "{r}")?;
            Ok(())
        }
    };
    if states.is_empty() {
        for line in io::stdin().lock().lines() {
            let line = line?;
            if !line.trim().is_empty() {
                one(&line)?;
            }
        }
    } else {
        for s in &states {
            one(s)?;
        }
    }
    Ok(())
}

fn step(out: &mut impl Write, outcome: StepOutcome, json: bool) -> Result<()> {
    if json {
        return json_line(out, &outcome);
    }
    match outcome {
        StepOutcome::Step { state, mv } => writeln!(out, "{state} {mv}")?,
        StepOutcome::Solved => writeln!(out, "solved")?,
        StepOutcome::First => writeln!(out, "first")?,
    }
    Ok(())
}

fn solve(out: &mut impl Write, q: QuatString, mode: Mode, with_states: bool, json: bool) -> Result<()> {
    let moves = solve_path(&q, mode.into())?;
    let mut states = vec![q.clone()];
    if with_states || json {
        for &m in &moves {
            let next = apply_move(states.last().unwrap(), m)?;
            states.push(next);
        }
    }
    if json {
        #[derive(Serialize)]
        struct Solution<'a> {
            start: &'a QuatString,
            mode: SolveMode,
            length: usize,
            moves: Vec<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            states: Option<&'a [QuatString]>,
        }
        return json_line(
            out,
            &Solution {
                start: &q,
                mode: mode.into(),
                length: moves.len(),
                moves: moves.iter().map(Move::to_string).collect(),
                states: with_states.then_some(&states[..]),
            },
        );
    }
    if with_states {
        writeln!(out, "{}", states[0])?;
        for (m, s) in moves.iter().zip(&states[1..]) {
            writeln!(out, "{m} {s}")?;
        }
    } else {
        let line: Vec<String> = moves.iter().map(Move::to_string).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

fn print_grid(out: &mut impl Write, g: &NurikabeGrid) -> Result<()> {
    writeln!(out, "{g}")?;
    Ok(())
}

fn nurikabe(out: &mut impl Write, command: NurikabeCommand) -> Result<()> {
    match command {
        NurikabeCommand::Count { n, format } => {
            let (a, b, c) = nurikabe_counts(n);
            if text_or_json(format) {
                #[derive(Serialize)]
                struct Counts {
                    n: usize,
                    all: Box<RawValue>,
                    black_columns: Box<RawValue>,
                    white_column: Box<RawValue>,
                }
                json_line(out, &Counts { n, all: big(&a), black_columns: big(&b), white_column: big(&c) })
            } else {
                writeln!(out, "{a} {b} {c}")?;
                Ok(())
            }
        }
        NurikabeCommand::Map { state: s, format } => {
            let g = sigma(&state(&s)?)?;
            if text_or_json(format) {
                json_line(out, &g)
            } else {
                print_grid(out, &g)
            }
        }
        NurikabeCommand::Unmap { top, bottom } => {
            let g: NurikabeGrid = format!("{top}\n{bottom}").parse()?;
            writeln!(out, "{}", sigma_inverse(&g)?)?;
            Ok(())
        }
        NurikabeCommand::Grids { n, format } => {
            let grids = enumerate_nurikabe(n)?;
            if text_or_json(format) {
                return json_line(out, &grids);
            }
            for (i, g) in grids.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                print_grid(out, g)?;
            }
            Ok(())
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::List { kind, n, format } => list(out, kind.into(), n, text_or_json(format))?,
        Command::Rank { kind, states, format } => {
            rank_states(out, kind.into(), states, text_or_json(format))?
        }
        Command::Unrank { kind, n, rank } => {
            let r: BigUint = rank
                .trim()
                .parse()
                .with_context(|| format!("rank {rank:?} is not a non-negative integer"))?;
            writeln!(out, "{}", unrank(kind.into(), n, &r)?)?;
        }
        Command::Next { kind, state: s, format } => {
            step(out, next(kind.into(), &state(&s)?)?, text_or_json(format))?
        }
        Command::Prev { kind, state: s, format } => {
            step(out, prev(kind.into(), &state(&s)?)?, text_or_json(format))?
        }
        Command::Compare { a, b } => {
            let sym = match compare(&state(&a)?, &state(&b)?)? {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            writeln!(out, "{sym}")?;
        }
        Command::Solve { mode, states, state: s, format } => {
            solve(out, state(&s)?, mode, states, text_or_json(format))?
        }
        Command::Moves { state: s, format } => {
            let moves = legal_moves(&state(&s)?)?;
            if text_or_json(format) {
                json_line(out, &moves)?;
            } else {
                let line: Vec<String> = moves.iter().map(Move::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Command::Graph { n, format } => {
            let g = build_graph(n)?;
            match format {
                Format::Dot => out.write_all(to_dot(&g).as_bytes())?,
                Format::Json => json_line(out, &export(&g))?,
                Format::Text => usage_error("`graph` writes --format dot or json"),
            }
        }
        Command::Nurikabe { command } => nurikabe(out, command)?,
        Command::Verify { n } => return verify::run(out, n),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = BufWriter::new(io::stdout().lock());
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>()
            .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}
