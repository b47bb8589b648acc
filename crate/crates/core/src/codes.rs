//! The four listings (binary reflected Gray code, quaternary reflected Gray
//! code, longest and shortest solutions) and their counting formulas.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Result, ZigguError};
use crate::state::QuatString;

/// Largest `n` for which [`listing`] materializes a whole list.
pub const MAX_MATERIALIZED_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ListingKind {
    Brgc,
    Quat,
    Long,
    Short,
}

impl ListingKind {
    pub const ALL: [ListingKind; 4] = [
        ListingKind::Brgc,
        ListingKind::Quat,
        ListingKind::Long,
        ListingKind::Short,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ListingKind::Brgc => "brgc",
            ListingKind::Quat => "quat",
            ListingKind::Long => "long",
            ListingKind::Short => "short",
        }
    }

    /// Largest digit value used by the kind.
    pub fn max_digit(self) -> u8 {
        match self {
            ListingKind::Brgc => 1,
            _ => 3,
        }
    }

    /// Membership in the kind's state set.
    pub fn contains(self, q: &QuatString) -> bool {
        match self {
            ListingKind::Brgc => q.is_binary(),
            ListingKind::Quat => true,
            ListingKind::Long => q.is_valid(),
            ListingKind::Short => q.is_ziggu(),
        }
    }

    pub fn require(self, q: &QuatString) -> Result<()> {
        match self {
            ListingKind::Brgc if !q.is_binary() => Err(q.invalid("binary digits")),
            ListingKind::Long => q.require_valid(),
            ListingKind::Short => q.require_ziggu(),
            _ => Ok(()),
        }
    }

    pub fn first(self, n: usize) -> QuatString {
        QuatString::zeros(n)
    }
}

impl fmt::Display for ListingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ListingKind {
    type Err = ZigguError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "brgc" | "binary" => Ok(ListingKind::Brgc),
            "quat" => Ok(ListingKind::Quat),
            "long" | "longest" => Ok(ListingKind::Long),
            "short" | "shortest" => Ok(ListingKind::Short),
            _ => Err(out_of_range("kind", s, "brgc|quat|long|short")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionList {
    pub kind: ListingKind,
    pub n: usize,
    pub states: Vec<QuatString>,
}

/// Sub-lists appearing in the recursions. `Core` is the building block of the
/// shortest solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Block {
    Brgc,
    Quat,
    Long,
    Short,
    Core,
}

#[derive(Debug, Clone, Copy)]
enum Child {
    /// Prefix digit followed by a sub-list (possibly reversed) one level down.
    Prefix(u8, Block, bool),
    /// `0 3^{k-1}`
    ZeroThrees,
    /// `3^k`
    Threes,
    /// Level 1: a single digit.
    Digit(u8),
}

use Child::*;

const BRGC_1: [Child; 2] = [Digit(0), Digit(1)];
const QUAT_1: [Child; 4] = [Digit(0), Digit(1), Digit(2), Digit(3)];
const BRGC_K: [Child; 2] = [Prefix(0, Block::Brgc, false), Prefix(1, Block::Brgc, true)];
const QUAT_K: [Child; 4] = [
    Prefix(0, Block::Quat, false),
    Prefix(1, Block::Quat, true),
    Prefix(2, Block::Quat, false),
    Prefix(3, Block::Quat, true),
];
const LONG_K: [Child; 4] = [
    Prefix(0, Block::Long, false),
    Prefix(1, Block::Long, true),
    Prefix(2, Block::Long, false),
    Threes,
];
const CORE_K: [Child; 4] = [
    ZeroThrees,
    Prefix(1, Block::Core, true),
    Prefix(2, Block::Core, false),
    Threes,
];
// 0.SHORT(k-1) followed by core(k) without its first state 03^{k-1}, which
// is the last state of 0.SHORT(k-1).
const SHORT_K: [Child; 4] = [
    Prefix(0, Block::Short, false),
    Prefix(1, Block::Core, true),
    Prefix(2, Block::Core, false),
    Threes,
];

fn children(block: Block, level: usize) -> &'static [Child] {
    match (block, level) {
        (Block::Brgc, 1) => &BRGC_1,
        (_, 1) => &QUAT_1,
        (Block::Brgc, _) => &BRGC_K,
        (Block::Quat, _) => &QUAT_K,
        (Block::Long, _) => &LONG_K,
        (Block::Short, _) => &SHORT_K,
        (Block::Core, _) => &CORE_K,
    }
}

impl From<ListingKind> for Block {
    fn from(k: ListingKind) -> Block {
        match k {
            ListingKind::Brgc => Block::Brgc,
            ListingKind::Quat => Block::Quat,
            ListingKind::Long => Block::Long,
            ListingKind::Short => Block::Short,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    block: Block,
    level: usize,
    reversed: bool,
    cursor: usize,
}

/// Lazy walk over a listing. Memory is O(n); work per state is amortized O(1).
#[derive(Debug, Clone)]
pub struct ListingIter {
    n: usize,
    digits: Vec<u8>,
    stack: Vec<Frame>,
}

impl ListingIter {
    pub fn new(kind: ListingKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", n, ">= 1"));
        }
        Ok(ListingIter {
            n,
            digits: vec![0; n],
            stack: vec![Frame {
                block: kind.into(),
                level: n,
                reversed: false,
                cursor: 0,
            }],
        })
    }

    /// Advance and borrow the next state's digits (text order).
    pub fn advance(&mut self) -> Option<&[u8]> {
        loop {
            let n = self.n;
            let top = self.stack.last_mut()?;
            let kids = children(top.block, top.level);
            if top.cursor == kids.len() {
                self.stack.pop();
                continue;
            }
            let idx = if top.reversed {
                kids.len() - 1 - top.cursor
            } else {
                top.cursor
            };
            top.cursor += 1;
            let (level, reversed) = (top.level, top.reversed);
            let p = n - level;
            match kids[idx] {
                Digit(d) => {
                    self.digits[p] = d;
                    return Some(&self.digits);
                }
                Threes => {
                    self.digits[p..].fill(3);
                    return Some(&self.digits);
                }
                ZeroThrees => {
                    self.digits[p] = 0;
                    self.digits[p + 1..].fill(3);
                    return Some(&self.digits);
                }
                Prefix(d, block, rev) => {
                    self.digits[p] = d;
                    self.stack.push(Frame {
                        block,
                        level: level - 1,
                        reversed: reversed ^ rev,
                        cursor: 0,
                    });
                }
            }
        }
    }
}

impl Iterator for ListingIter {
    type Item = QuatString;

    fn next(&mut self) -> Option<QuatString> {
        self.advance()
            .map(|d| QuatString::from_digits_unchecked(d.to_vec()))
    }
}

/// Lazy listing; usable for any `n`.
pub fn listing_iter(kind: ListingKind, n: usize) -> Result<ListingIter> {
    ListingIter::new(kind, n)
}

/// Fully materialized listing, `1 <= n <= 12`.
pub fn listing(kind: ListingKind, n: usize) -> Result<SolutionList> {
    if n > MAX_MATERIALIZED_N {
        return Err(out_of_range("n", n, format!("1..={MAX_MATERIALIZED_N}")));
    }
    let states = listing_iter(kind, n)?.collect();
    Ok(SolutionList { kind, n, states })
}

/// Greedy construction: complement the rightmost bit that gives a new string.
pub fn greedy_brgc(n: usize) -> Result<SolutionList> {
    if n == 0 || n > 20 {
        return Err(out_of_range("n", n, "1..=20"));
    }
    let mut cur = vec![0u8; n];
    let mut seen = HashSet::new();
    seen.insert(cur.clone());
    let mut states = vec![QuatString::from_digits_unchecked(cur.clone())];
    'walk: loop {
        for p in (0..n).rev() {
            cur[p] ^= 1;
            if seen.insert(cur.clone()) {
                states.push(QuatString::from_digits_unchecked(cur.clone()));
                continue 'walk;
            }
            cur[p] ^= 1;
        }
        break;
    }
    Ok(SolutionList {
        kind: ListingKind::Brgc,
        n,
        states,
    })
}

fn pow(base: u32, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), e)
}

fn nonneg(x: BigInt) -> BigUint {
    x.to_biguint().expect("count is non-negative")
}

/// Number of states in a listing, closed form.
pub fn count(kind: ListingKind, n: usize) -> BigUint {
    match kind {
        ListingKind::Brgc => pow(2, n),
        ListingKind::Quat => pow(4, n),
        ListingKind::Long => (pow(3, n + 1) - 1u32) / 2u32,
        ListingKind::Short => {
            nonneg(BigInt::from(pow(2, n) * 6u32) - BigInt::from(3 * n) - 5)
        }
    }
}

/// Number of states in a listing, by its recurrence.
pub fn recurrence_count(kind: ListingKind, n: usize) -> BigUint {
    match kind {
        ListingKind::Brgc => (1..n).fold(BigUint::from(2u32), |g, _| g * 2u32),
        ListingKind::Quat => (1..n).fold(BigUint::from(4u32), |g, _| g * 4u32),
        ListingKind::Long => (1..n).fold(BigUint::from(4u32), |g, _| g * 3u32 + 1u32),
        ListingKind::Short => {
            // g(n) = 3g(n-1) - 2g(n-2) + 3 with g(1) = 4, g(2) = 13
            let (mut a, mut b) = (BigInt::from(4), BigInt::from(13));
            if n == 1 {
                return nonneg(a);
            }
            for _ in 2..n {
                let c = &b * 3 - &a * 2 + 3;
                a = b;
                b = c;
            }
            nonneg(b)
        }
    }
}

/// Number of moves (`count - 1`), closed form.
pub fn move_count(kind: ListingKind, n: usize) -> BigUint {
    count(kind, n) - 1u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicPuzzle {
    Hanoi,
    Spinout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Moves,
    States,
}

/// Solution sizes of the Towers of Hanoi and Spin-Out, closed form.
pub fn classic_count(puzzle: ClassicPuzzle, n: usize, quantity: Quantity) -> BigUint {
    match (puzzle, quantity) {
        (ClassicPuzzle::Hanoi, Quantity::Moves) => pow(2, n) - 1u32,
        (ClassicPuzzle::Hanoi, Quantity::States) => pow(2, n),
        (ClassicPuzzle::Spinout, Quantity::Moves) => pow(2, n + 1) / 3u32,
        (ClassicPuzzle::Spinout, Quantity::States) => (pow(2, n + 1) + 2u32) / 3u32,
    }
}

/// Same quantities by recurrence.
pub fn classic_recurrence(puzzle: ClassicPuzzle, n: usize, quantity: Quantity) -> BigUint {
    let one = BigUint::one();
    match (puzzle, quantity) {
        (ClassicPuzzle::Hanoi, Quantity::Moves) => {
            (1..n).fold(one.clone(), |f, _| f * 2u32 + 1u32)
        }
        (ClassicPuzzle::Hanoi, Quantity::States) => (1..n).fold(BigUint::from(2u32), |g, _| g * 2u32),
        (ClassicPuzzle::Spinout, q) => {
            // f(n) = f(n-1) + 2 f(n-2) + c, c = +1 for moves and -1 for states
            let (f1, f2) = match q {
                Quantity::Moves => (BigInt::from(1), BigInt::from(2)),
                Quantity::States => (BigInt::from(2), BigInt::from(3)),
            };
            let c = match q {
                Quantity::Moves => 1,
                Quantity::States => -1,
            };
            if n == 1 {
                return nonneg(f1);
            }
            let (mut a, mut b) = (f1, f2);
            for _ in 2..n {
                let next = &b + &a * 2 + c;
                a = b;
                b = next;
            }
            nonneg(b)
        }
    }
}

/// `count` as a `u64` when it fits.
pub fn count_u64(kind: ListingKind, n: usize) -> Option<u64> {
    count(kind, n).to_u64()
}
