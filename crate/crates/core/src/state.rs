//! Puzzle states, the two state-set predicates, maze vectors and the move model.
//!
//! A state is stored in text order (leftmost digit first). Digit positions in
//! the public API are counted from the right starting at 1, so in `"10203"`
//! digit 5 is `1` and digit 1 is `3`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{MoveViolation, Result, ZigguError};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuatString {
    digits: Vec<u8>,
}

impl QuatString {
    /// Build from digits in text order.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(ZigguError::Empty);
        }
        if let Some(pos) = digits.iter().position(|&d| d > 3) {
            return Err(ZigguError::BadDigit {
                ch: char::from_digit(digits[pos] as u32, 36).unwrap_or('?'),
                pos,
            });
        }
        Ok(QuatString { digits })
    }

    pub(crate) fn from_digits_unchecked(digits: Vec<u8>) -> Self {
        debug_assert!(!digits.is_empty() && digits.iter().all(|&d| d <= 3));
        QuatString { digits }
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_digits_unchecked(vec![0; n.max(1)])
    }

    pub fn threes(n: usize) -> Self {
        Self::from_digits_unchecked(vec![3; n.max(1)])
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Digits in text order.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.digits
    }

    /// Digit `q_i`, `i` counted from the right starting at 1.
    pub fn get(&self, i: usize) -> u8 {
        self.digits[self.pos(i)]
    }

    /// Sum of the digits strictly to the left of `q_i`.
    pub fn left_sum(&self, i: usize) -> u32 {
        self.digits[..self.pos(i)].iter().map(|&d| d as u32).sum()
    }

    pub fn with_digit(&self, i: usize, value: u8) -> QuatString {
        let mut digits = self.digits.clone();
        let p = self.pos(i);
        digits[p] = value;
        QuatString::from_digits_unchecked(digits)
    }

    /// Text position of digit index `i`.
    fn pos(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.len(), "digit index {i} out of 1..={}", self.len());
        self.len() - i
    }

    pub fn is_valid(&self) -> bool {
        Pattern::Valid.accepts(&self.digits)
    }

    pub fn is_ziggu(&self) -> bool {
        Pattern::Ziggu.accepts(&self.digits)
    }

    pub fn is_binary(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1)
    }

    pub fn is_solved(&self) -> bool {
        self.digits.iter().all(|&d| d == 3)
    }

    pub fn is_start(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(self.invalid("validity (only 3 may follow a 3)"))
        }
    }

    pub fn require_ziggu(&self) -> Result<()> {
        if self.is_ziggu() {
            Ok(())
        } else {
            Err(self.invalid("ziggu (not on the shortest solution)"))
        }
    }

    pub(crate) fn invalid(&self, rule: &'static str) -> ZigguError {
        ZigguError::InvalidState {
            state: self.to_string(),
            rule,
        }
    }

    /// `rho`-style digit swap 1 <-> 2.
    pub fn swap_one_two(&self) -> QuatString {
        let digits = self
            .digits
            .iter()
            .map(|&d| match d {
                1 => 2,
                2 => 1,
                d => d,
            })
            .collect();
        QuatString::from_digits_unchecked(digits)
    }
}

impl fmt::Display for QuatString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.digits.iter().map(|&d| (b'0' + d) as char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for QuatString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuatString({self})")
    }
}

impl FromStr for QuatString {
    type Err = ZigguError;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(ZigguError::Empty);
        }
        let mut digits = Vec::with_capacity(s.len());
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '0'..='3' => digits.push(ch as u8 - b'0'),
                _ => return Err(ZigguError::BadDigit { ch, pos }),
            }
        }
        Ok(QuatString { digits })
    }
}

impl Serialize for QuatString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuatString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Small automata for the two state sets, read left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pattern {
    /// `{0,1,2}* 3*`
    Valid,
    /// `0* {1,2}* 0? 3*`
    Ziggu,
}

const DEAD: u8 = u8::MAX;

impl Pattern {
    fn states(self) -> u8 {
        match self {
            Pattern::Valid => 2,
            Pattern::Ziggu => 4,
        }
    }

    fn step(self, s: u8, d: u8) -> u8 {
        match (self, s, d) {
            (_, DEAD, _) => DEAD,
            (Pattern::Valid, 0, 0..=2) => 0,
            (Pattern::Valid, _, 3) => 1,
            (Pattern::Valid, _, _) => DEAD,
            // 0: leading zeros, 1: ones and twos, 2: the single 0, 3: trailing threes
            (Pattern::Ziggu, 0, 0) => 0,
            (Pattern::Ziggu, 0 | 1, 1 | 2) => 1,
            (Pattern::Ziggu, 1, 0) => 2,
            (Pattern::Ziggu, _, 3) => 3,
            (Pattern::Ziggu, _, _) => DEAD,
        }
    }

    pub(crate) fn accepts(self, digits: &[u8]) -> bool {
        digits.iter().fold(0, |s, &d| self.step(s, d)) != DEAD
    }
}

/// Answers "is the string still in the set after changing one digit" in O(1)
/// after O(n) set-up.
pub(crate) struct EditChecker {
    pattern: Pattern,
    digits: Vec<u8>,
    /// `prefix[p]` = automaton state after reading `digits[..p]`.
    prefix: Vec<u8>,
    /// `suffix[p]` = bitmask of states from which `digits[p..]` is accepted.
    suffix: Vec<u8>,
}

impl EditChecker {
    pub(crate) fn new(pattern: Pattern, digits: &[u8]) -> Self {
        let n = digits.len();
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0);
        for &d in digits {
            let s = pattern.step(*prefix.last().unwrap(), d);
            prefix.push(s);
        }
        let all = (1u8 << pattern.states()) - 1;
        let mut suffix = vec![0u8; n + 1];
        suffix[n] = all;
        for p in (0..n).rev() {
            let mut mask = 0;
            for s in 0..pattern.states() {
                let t = pattern.step(s, digits[p]);
                if t != DEAD && suffix[p + 1] & (1 << t) != 0 {
                    mask |= 1 << s;
                }
            }
            suffix[p] = mask;
        }
        EditChecker {
            pattern,
            digits: digits.to_vec(),
            prefix,
            suffix,
        }
    }

    /// Would the string be accepted with text position `p` set to `v`?
    pub(crate) fn accepts_with(&self, p: usize, v: u8) -> bool {
        debug_assert!(p < self.digits.len());
        let t = self.pattern.step(self.prefix[p], v);
        t != DEAD && self.suffix[p + 1] & (1 << t) != 0
    }
}

/// One unit change of one digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    /// Digit position counted from the right, starting at 1.
    pub index: usize,
    /// `+1` or `-1`.
    pub delta: i8,
}

impl Move {
    pub fn new(index: usize, delta: i8) -> Self {
        Move { index, delta }
    }

    pub fn inverse(self) -> Move {
        Move {
            index: self.index,
            delta: -self.delta,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.delta < 0 { '-' } else { '+' };
        write!(f, "{sign}{}", self.index)
    }
}

/// Checks a move against the maze model and returns the resulting state.
pub fn check_move(q: &QuatString, mv: Move) -> std::result::Result<QuatString, MoveViolation> {
    let n = q.len();
    let i = mv.index;
    if i == 0 || i > n {
        return Err(MoveViolation::NoSuchDigit);
    }
    if mv.delta != 1 && mv.delta != -1 {
        return Err(MoveViolation::BadDelta);
    }
    let old = q.get(i);
    let new = old as i8 + mv.delta;
    if !(0..=3).contains(&new) {
        return Err(MoveViolation::DigitBound);
    }
    let new = new as u8;
    // q itself is valid, so only the neighbourhood of digit i can break it.
    if new == 3 && i > 1 && q.get(i - 1) != 3 {
        return Err(MoveViolation::Validity);
    }
    if old == 3 && i < n && q.get(i + 1) == 3 {
        return Err(MoveViolation::Validity);
    }
    if i > 1 {
        // row change inside the maze whose column is q_{i-1}
        let r = old.min(new);
        let needed = if r.is_multiple_of(2) { 3 } else { 0 };
        if q.get(i - 1) != needed {
            return Err(MoveViolation::MazeTurn {
                blocker: i - 1,
                needed,
            });
        }
    }
    Ok(q.with_digit(i, new))
}

/// All legal moves, ordered by index then `+1` before `-1`.
pub fn legal_moves(q: &QuatString) -> Result<Vec<Move>> {
    q.require_valid()?;
    let mut out = Vec::new();
    for i in 1..=q.len() {
        for delta in [1, -1] {
            let mv = Move::new(i, delta);
            if check_move(q, mv).is_ok() {
                out.push(mv);
            }
        }
    }
    Ok(out)
}

pub fn apply_move(q: &QuatString, mv: Move) -> Result<QuatString> {
    q.require_valid()?;
    check_move(q, mv).map_err(|reason| ZigguError::IllegalMove {
        state: q.to_string(),
        index: mv.index,
        delta: mv.delta,
        reason,
    })
}

/// Positions of the `n-1` chained mazes; maze `j` (from the left) sits at
/// row = text digit `j`, column = text digit `j+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MazeVector {
    pub positions: Vec<(u8, u8)>,
}

pub fn is_maze_cell(row: u8, col: u8) -> bool {
    (row <= 2 && col <= 3) || (row == 3 && col == 3)
}

pub fn to_maze(q: &QuatString) -> Result<MazeVector> {
    q.require_valid()?;
    if q.len() < 2 {
        return Err(crate::error::out_of_range("n", q.len(), ">= 2"));
    }
    let positions = q.digits().windows(2).map(|w| (w[0], w[1])).collect();
    Ok(MazeVector { positions })
}

pub fn from_maze(mv: &MazeVector) -> Result<QuatString> {
    if mv.positions.is_empty() {
        return Err(ZigguError::InvalidMaze("no mazes".into()));
    }
    for (j, &(r, c)) in mv.positions.iter().enumerate() {
        if !is_maze_cell(r, c) {
            return Err(ZigguError::InvalidMaze(format!(
                "maze {j} at illegal cell ({r},{c})"
            )));
        }
    }
    for (j, w) in mv.positions.windows(2).enumerate() {
        if w[0].1 != w[1].0 {
            return Err(ZigguError::InvalidMaze(format!(
                "mazes {j} and {} disagree on their shared digit",
                j + 1
            )));
        }
    }
    let mut digits: Vec<u8> = mv.positions.iter().map(|p| p.0).collect();
    digits.push(mv.positions.last().unwrap().1);
    Ok(QuatString::from_digits_unchecked(digits))
}
