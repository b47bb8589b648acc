//! Change ("ruler") sequences: which digit changes between consecutive states
//! of a listing, with or without the direction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::codes::ListingKind;
use crate::error::{out_of_range, Result, ZigguError};
use crate::state::{Move, QuatString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RulerKind {
    Binary,
    Quat,
    Long,
    Short,
}

impl RulerKind {
    pub const ALL: [RulerKind; 4] = [
        RulerKind::Binary,
        RulerKind::Quat,
        RulerKind::Long,
        RulerKind::Short,
    ];

    pub fn listing(self) -> ListingKind {
        match self {
            RulerKind::Binary => ListingKind::Brgc,
            RulerKind::Quat => ListingKind::Quat,
            RulerKind::Long => ListingKind::Long,
            RulerKind::Short => ListingKind::Short,
        }
    }
}

impl From<ListingKind> for RulerKind {
    fn from(k: ListingKind) -> Self {
        match k {
            ListingKind::Brgc => RulerKind::Binary,
            ListingKind::Quat => RulerKind::Quat,
            ListingKind::Long => RulerKind::Long,
            ListingKind::Short => RulerKind::Short,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
    Unsigned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChangeEntry {
    pub index: usize,
    pub sign: Sign,
}

impl ChangeEntry {
    pub fn signed(index: usize, delta: i8) -> Self {
        let sign = if delta < 0 { Sign::Minus } else { Sign::Plus };
        ChangeEntry { index, sign }
    }

    pub fn unsigned(index: usize) -> Self {
        ChangeEntry {
            index,
            sign: Sign::Unsigned,
        }
    }

    pub fn negated(self) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Unsigned => Sign::Unsigned,
        };
        ChangeEntry { sign, ..self }
    }

    pub fn magnitude(self) -> ChangeEntry {
        ChangeEntry::unsigned(self.index)
    }

    /// Signed value as an integer; unsigned entries count as positive.
    pub fn value(self) -> i64 {
        match self.sign {
            Sign::Minus => -(self.index as i64),
            _ => self.index as i64,
        }
    }

    pub fn as_move(self) -> Option<Move> {
        match self.sign {
            Sign::Plus => Some(Move::new(self.index, 1)),
            Sign::Minus => Some(Move::new(self.index, -1)),
            Sign::Unsigned => None,
        }
    }
}

impl From<Move> for ChangeEntry {
    fn from(m: Move) -> Self {
        ChangeEntry::signed(m.index, m.delta)
    }
}

impl fmt::Display for ChangeEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "+{}", self.index),
            Sign::Minus => write!(f, "-{}", self.index),
            Sign::Unsigned => write!(f, "{}", self.index),
        }
    }
}

impl FromStr for ChangeEntry {
    type Err = ZigguError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || out_of_range("change entry", s, "[+|-]index with index >= 1");
        let (sign, digits) = match s.as_bytes().first() {
            Some(b'+') => (Sign::Plus, &s[1..]),
            Some(b'-') => (Sign::Minus, &s[1..]),
            _ => (Sign::Unsigned, s),
        };
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(ChangeEntry { index, sign })
    }
}

/// One step in a recursion: either a sub-sequence one level down or the
/// separator `+k` of the current level.
#[derive(Debug, Clone, Copy)]
enum Part {
    /// Sub-sequence. `cmax` negates the sub-sequence's own separators;
    /// `revneg` reverses it and negates every entry.
    Sub { short: bool, cmax: bool, revneg: bool },
    Sep,
}

const fn sub(short: bool) -> Part {
    Part::Sub {
        short,
        cmax: false,
        revneg: false,
    }
}
const fn sub_cmax(short: bool) -> Part {
    Part::Sub {
        short,
        cmax: true,
        revneg: false,
    }
}
const SUB_REVNEG: Part = Part::Sub {
    short: false,
    cmax: false,
    revneg: true,
};

const LEVEL1_BINARY: [Part; 1] = [Part::Sep];
const LEVEL1: [Part; 3] = [Part::Sep, Part::Sep, Part::Sep];
const BINARY_K: [Part; 3] = [sub(false), Part::Sep, sub_cmax(false)];
const QUAT_K: [Part; 7] = [
    sub(false),
    Part::Sep,
    sub_cmax(false),
    Part::Sep,
    sub(false),
    Part::Sep,
    sub_cmax(false),
];
const LONG_K: [Part; 6] = [sub(false), Part::Sep, SUB_REVNEG, Part::Sep, sub(false), Part::Sep];
// flag f = 1: the full shortest-solution sequence
const SHORT1_K: [Part; 6] = [
    sub(true),
    Part::Sep,
    sub_cmax(false),
    Part::Sep,
    sub(false),
    Part::Sep,
];
// flag f = 0: the core sequence
const SHORT0_K: [Part; 5] = [Part::Sep, sub_cmax(false), Part::Sep, sub(false), Part::Sep];

fn parts(kind: RulerKind, flag: bool, level: usize) -> &'static [Part] {
    match (kind, level) {
        (RulerKind::Binary, 1) => &LEVEL1_BINARY,
        (_, 1) => &LEVEL1,
        (RulerKind::Binary, _) => &BINARY_K,
        (RulerKind::Quat, _) => &QUAT_K,
        (RulerKind::Long, _) => &LONG_K,
        (RulerKind::Short, _) if flag => &SHORT1_K,
        (RulerKind::Short, _) => &SHORT0_K,
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    level: usize,
    flag: bool,
    reversed: bool,
    negate_all: bool,
    negate_top: bool,
    cursor: usize,
}

/// Lazy change sequence.
#[derive(Debug, Clone)]
pub struct RulerIter {
    kind: RulerKind,
    signed: bool,
    stack: Vec<Frame>,
}

impl Iterator for RulerIter {
    type Item = ChangeEntry;

    fn next(&mut self) -> Option<ChangeEntry> {
        loop {
            let top = self.stack.last_mut()?;
            let ps = parts(self.kind, top.flag, top.level);
            if top.cursor == ps.len() {
                self.stack.pop();
                continue;
            }
            let idx = if top.reversed {
                ps.len() - 1 - top.cursor
            } else {
                top.cursor
            };
            top.cursor += 1;
            let f = *top;
            match ps[idx] {
                Part::Sep => {
                    if !self.signed {
                        return Some(ChangeEntry::unsigned(f.level));
                    }
                    let negative = f.negate_all ^ f.negate_top;
                    return Some(ChangeEntry::signed(f.level, if negative { -1 } else { 1 }));
                }
                Part::Sub { short, cmax, revneg } => self.stack.push(Frame {
                    level: f.level - 1,
                    flag: short,
                    reversed: f.reversed ^ revneg,
                    negate_all: f.negate_all ^ revneg,
                    negate_top: cmax,
                    cursor: 0,
                }),
            }
        }
    }
}

pub fn ruler_iter(kind: RulerKind, n: usize, signed: bool) -> Result<RulerIter> {
    if n == 0 {
        return Err(out_of_range("n", n, ">= 1"));
    }
    Ok(RulerIter {
        kind,
        signed,
        stack: vec![Frame {
            level: n,
            flag: true,
            reversed: false,
            negate_all: false,
            negate_top: false,
            cursor: 0,
        }],
    })
}

/// Materialized change sequence, `1 <= n <= 12`.
pub fn ruler(kind: RulerKind, n: usize, signed: bool) -> Result<Vec<ChangeEntry>> {
    if n > crate::codes::MAX_MATERIALIZED_N {
        return Err(out_of_range("n", n, "1..=12"));
    }
    Ok(ruler_iter(kind, n, signed)?.collect())
}

/// Entry `j` (1-based) of the binary sequence without recursion.
pub fn ruler_entry_binary(j: u64, signed: bool) -> Result<ChangeEntry> {
    if j == 0 {
        return Err(out_of_range("j", j, ">= 1"));
    }
    let tz = j.trailing_zeros();
    let index = tz as usize + 1;
    if !signed {
        return Ok(ChangeEntry::unsigned(index));
    }
    // odd part ends in binary 01 -> positive, 11 -> negative
    let delta = if (j >> tz) % 4 == 1 { 1 } else { -1 };
    Ok(ChangeEntry::signed(index, delta))
}

/// Negates the entries whose index is the maximum of the sequence.
pub fn complement_max(seq: &[ChangeEntry]) -> Vec<ChangeEntry> {
    let top = seq.iter().map(|e| e.index).max().unwrap_or(0);
    seq.iter()
        .map(|&e| if e.index == top { e.negated() } else { e })
        .collect()
}

/// Reverses the sequence and negates every entry, i.e. the change sequence of
/// the reversed listing.
pub fn reverse_complement(seq: &[ChangeEntry]) -> Vec<ChangeEntry> {
    seq.iter().rev().map(|e| e.negated()).collect()
}

/// Negates every second occurrence of each index.
pub fn complement_mid(seq: &[ChangeEntry]) -> Vec<ChangeEntry> {
    let mut seen = std::collections::HashMap::new();
    seq.iter()
        .map(|&e| {
            let c = seen.entry(e.index).or_insert(0usize);
            *c += 1;
            if *c % 2 == 0 {
                e.negated()
            } else {
                e
            }
        })
        .collect()
}

/// Applies a change sequence from `start`, returning every visited state.
///
/// Unsigned entries pick their direction from the digit: `0` goes up, the top
/// digit goes down, and otherwise the digit goes up iff the sum of the digits
/// to its left is even.
pub fn replay(
    kind: RulerKind,
    start: &QuatString,
    entries: impl IntoIterator<Item = ChangeEntry>,
) -> Result<Vec<QuatString>> {
    let max = kind.listing().max_digit();
    if start.digits().iter().any(|&d| d > max) {
        return Err(start.invalid("digit range of the ruler kind"));
    }
    let n = start.len();
    let mut digits = start.digits().to_vec();
    let mut states = vec![start.clone()];
    for e in entries {
        if e.index == 0 || e.index > n {
            return Err(out_of_range("change index", e.index, format!("1..={n}")));
        }
        let p = n - e.index;
        let d = digits[p];
        let delta: i8 = match e.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
            Sign::Unsigned if d == 0 => 1,
            Sign::Unsigned if d == max => -1,
            Sign::Unsigned => {
                let left: u32 = digits[..p].iter().map(|&x| x as u32).sum();
                if left.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        };
        let v = d as i8 + delta;
        if v < 0 || v > max as i8 {
            return Err(out_of_range(
                "replayed digit",
                v,
                format!("0..={max} (entry {e} at {})", states.last().unwrap()),
            ));
        }
        digits[p] = v as u8;
        states.push(QuatString::from_digits_unchecked(digits.clone()));
    }
    Ok(states)
}
