//! 2 x n Nurikabe grids and the bijection with shortest-solution states.
//!
//! The grid map reads the word left to right: `w_1` is the leftmost digit and
//! becomes the leftmost column.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, ZigguError};
use crate::state::QuatString;

/// One column, `true` meaning black.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub top: bool,
    pub bottom: bool,
}

impl Column {
    pub const BB: Column = Column { top: true, bottom: true };
    pub const WB: Column = Column { top: false, bottom: true };
    pub const BW: Column = Column { top: true, bottom: false };
    pub const WW: Column = Column { top: false, bottom: false };
    pub const ALL: [Column; 4] = [Column::BB, Column::WB, Column::BW, Column::WW];

    /// Column for a digit: 0 black/black, 1 white-top, 2 white-bottom, 3 white/white.
    pub fn of_digit(d: u8) -> Column {
        match d {
            0 => Column::BB,
            1 => Column::WB,
            2 => Column::BW,
            _ => Column::WW,
        }
    }

    pub fn mirrored(self) -> Column {
        Column {
            top: self.bottom,
            bottom: self.top,
        }
    }

    fn any_black(self) -> bool {
        self.top || self.bottom
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NurikabeGrid {
    columns: Vec<Column>,
}

impl NurikabeGrid {
    pub fn new(columns: Vec<Column>) -> Self {
        NurikabeGrid { columns }
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Black cells connected (an empty black region counts) and no 2 x 2
    /// black block.
    pub fn is_valid(&self) -> bool {
        let c = &self.columns;
        if c.windows(2).any(|w| w[0] == Column::BB && w[1] == Column::BB) {
            return false;
        }
        // Scan left to right: black columns must form one run, and inside the
        // run neighbouring columns must share a black row.
        let first = c.iter().position(|x| x.any_black());
        let last = c.iter().rposition(|x| x.any_black());
        let (Some(first), Some(last)) = (first, last) else {
            return true;
        };
        c[first..=last].windows(2).all(|w| {
            (w[0].top && w[1].top) || (w[0].bottom && w[1].bottom)
        }) && c[first..=last].iter().all(|x| x.any_black())
    }

    pub fn mirrored(&self) -> NurikabeGrid {
        NurikabeGrid::new(self.columns.iter().map(|c| c.mirrored()).collect())
    }

    /// Has at least one black cell in every column. False for the empty
    /// grid, which is counted with the grids that have an all-white column.
    pub fn all_columns_black(&self) -> bool {
        !self.columns.is_empty() && self.columns.iter().all(|c| c.any_black())
    }
}

impl fmt::Display for NurikabeGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |pick: fn(&Column) -> bool| -> String {
            self.columns
                .iter()
                .map(|c| if pick(c) { '#' } else { '.' })
                .collect()
        };
        write!(f, "{}\n{}", row(|c| c.top), row(|c| c.bottom))
    }
}

impl FromStr for NurikabeGrid {
    type Err = ZigguError;

    /// Two rows of `#` (black) and `.` (white), top row first.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if rows.len() != 2 || rows[0].len() != rows[1].len() {
            return Err(ZigguError::InvalidGrid("expected two rows of equal length".into()));
        }
        let cell = |ch: char| match ch {
            '#' => Ok(true),
            '.' => Ok(false),
            _ => Err(ZigguError::InvalidGrid(format!("unexpected cell {ch:?}"))),
        };
        let columns = rows[0]
            .chars()
            .zip(rows[1].chars())
            .map(|(t, b)| Ok(Column { top: cell(t)?, bottom: cell(b)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(NurikabeGrid::new(columns))
    }
}

impl Serialize for NurikabeGrid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text = self.to_string();
        let rows: Vec<&str> = text.lines().collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NurikabeGrid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<String>::deserialize(d)?;
        rows.join("\n").parse().map_err(serde::de::Error::custom)
    }
}

/// Column for a middle digit given the column to its right (`None` at the
/// right edge).
fn transition(right: Option<Column>, x: u8) -> Result<Column> {
    Ok(match (right, x) {
        (Some(Column::WB), 2) | (Some(Column::BW), 1) => Column::BB,
        (Some(Column::BB | Column::WB), 1) => Column::WB,
        (Some(Column::BB | Column::BW), 2) => Column::BW,
        // an all-white neighbour or the edge does not constrain the column
        (None | Some(Column::WW), 1 | 2) => Column::of_digit(x),
        _ => {
            return Err(ZigguError::InvalidGrid(format!(
                "no middle column for digit {x}"
            )))
        }
    })
}

/// Start (0-based) of the maximal suffix of the form `3*` or `0 3*`.
fn suffix_start(w: &[u8]) -> usize {
    let mut k = w.len();
    while k > 0 && w[k - 1] == 3 {
        k -= 1;
    }
    if k > 0 && w[k - 1] == 0 {
        k -= 1;
    }
    k
}

/// The grid of a shortest-solution state.
pub fn sigma(w: &QuatString) -> Result<NurikabeGrid> {
    w.require_ziggu()?;
    let d = w.digits();
    let n = d.len();
    let k = suffix_start(d);
    let l = d.iter().take_while(|&&x| x == 0).count();
    let mut cols = vec![Column::WW; n];
    for i in (0..n).rev() {
        cols[i] = if i >= k {
            Column::of_digit(d[i])
        } else if i >= l {
            transition(cols.get(i + 1).copied(), d[i])?
        } else {
            Column::WW
        };
    }
    Ok(NurikabeGrid::new(cols))
}

/// Inverse of [`sigma`].
pub fn sigma_inverse(g: &NurikabeGrid) -> Result<QuatString> {
    if g.width() == 0 {
        return Err(ZigguError::Empty);
    }
    if !g.is_valid() {
        return Err(ZigguError::InvalidGrid(format!("not a valid grid:\n{g}")));
    }
    let c = g.columns();
    let n = c.len();
    let mut d = vec![0u8; n];
    let mut p = n;
    while p > 0 && c[p - 1] == Column::WW {
        p -= 1;
        d[p] = 3;
    }
    if p > 0 && c[p - 1] == Column::BB {
        p -= 1;
        d[p] = 0;
    }
    // middle columns right to left, then the all-white zero prefix
    while p > 0 && c[p - 1] != Column::WW {
        p -= 1;
        d[p] = match c[p] {
            Column::WB => 1,
            Column::BW => 2,
            _ => match c.get(p + 1) {
                Some(&Column::BW) => 1,
                Some(&Column::WB) => 2,
                _ => {
                    return Err(ZigguError::InvalidGrid(format!(
                        "grid is not an image of a state:\n{g}"
                    )))
                }
            },
        };
    }
    for x in d[..p].iter_mut() {
        *x = 0;
    }
    let w = QuatString::from_digits_unchecked(d);
    if w.is_ziggu() && sigma(&w)? == *g {
        Ok(w)
    } else {
        Err(ZigguError::InvalidGrid(format!("grid is not an image of a state:\n{g}")))
    }
}

/// Swaps digits 1 and 2.
pub fn rho(w: &QuatString) -> Result<QuatString> {
    w.require_ziggu()?;
    Ok(w.swap_one_two())
}

/// `sigma(rho(w))` is the top/bottom mirror of `sigma(w)`.
pub fn reflection_check(w: &QuatString) -> Result<bool> {
    Ok(sigma(&rho(w)?)? == sigma(w)?.mirrored())
}

/// `(a, b, c)`: all grids, grids with black in every column, grids with an
/// all-white column.
pub fn nurikabe_counts(n: usize) -> (BigUint, BigUint, BigUint) {
    let a = crate::codes::count(crate::codes::ListingKind::Short, n.max(1));
    if n == 0 {
        return (BigUint::from(1u32), BigUint::from(0u32), BigUint::from(1u32));
    }
    let half = BigUint::from(1u32) << (n - 1);
    let b = &half * 3u32;
    let c = half * 9u32 - (3 * n as u64 + 5);
    (a, b, c)
}
