//! Loopless generation of the shortest solution: worst-case O(1) work between
//! consecutive states.
//!
//! Both generators keep the word indexed from the right (`w[i-1]` is digit
//! `i`) and report each change as a [`Move`]. Digit and direction accesses go
//! through a [`Probe`], so a counting probe can bound the work per state.

use crate::error::{out_of_range, Result};
use crate::state::{Move, QuatString};

/// Observer of memory accesses made by a generator.
pub trait Probe {
    fn read(&mut self) {}
    fn write(&mut self) {}
    /// Called once per emitted state.
    fn emit(&mut self) {}
}

/// Probe that does nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoProbe;

impl Probe for NoProbe {}

/// Counts reads and writes, and the largest number of accesses between two
/// emitted states.
#[derive(Debug, Clone, Copy, Default)]
pub struct CountingProbe {
    pub reads: u64,
    pub writes: u64,
    pub emitted: u64,
    pub max_per_state: u64,
    current: u64,
}

impl Probe for CountingProbe {
    fn read(&mut self) {
        self.reads += 1;
        self.current += 1;
    }

    fn write(&mut self) {
        self.writes += 1;
        self.current += 1;
    }

    fn emit(&mut self) {
        self.emitted += 1;
        self.max_per_state = self.max_per_state.max(self.current);
        self.current = 0;
    }
}

#[derive(Debug, Clone)]
struct Word<P> {
    w: Vec<u8>,
    probe: P,
}

impl<P: Probe> Word<P> {
    fn get(&mut self, i: usize) -> u8 {
        self.probe.read();
        self.w[i - 1]
    }

    fn set(&mut self, i: usize, v: u8) {
        self.probe.write();
        self.w[i - 1] = v;
    }

    fn state(&self) -> QuatString {
        QuatString::from_digits_unchecked(self.w.iter().rev().copied().collect())
    }
}

/// Generator with a single index variable.
///
/// At digit 1 the generator spins the digit through three unit steps; at any
/// other digit it goes up iff the digit and its right neighbour have opposite
/// parity, then moves left if the digit became 0 or 3 and right otherwise.
#[derive(Debug, Clone)]
pub struct FastZiggu<P = NoProbe> {
    word: Word<P>,
    i: usize,
    /// Remaining unit steps of a spin of digit 1 and its direction.
    spin: u8,
    spin_delta: i8,
    started: bool,
}

impl FastZiggu<NoProbe> {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_probe(n, NoProbe)
    }
}

impl<P: Probe> FastZiggu<P> {
    pub fn with_probe(n: usize, probe: P) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", n, ">= 1"));
        }
        Ok(FastZiggu {
            word: Word { w: vec![0; n], probe },
            i: 1,
            spin: 0,
            spin_delta: 0,
            started: false,
        })
    }

    pub fn probe(&self) -> &P {
        &self.word.probe
    }

    pub fn n(&self) -> usize {
        self.word.w.len()
    }

    /// Current word.
    pub fn state(&self) -> QuatString {
        self.word.state()
    }

    /// Digits indexed from the right: element `i-1` is digit `i`.
    pub fn digits_from_right(&self) -> &[u8] {
        &self.word.w
    }

    /// Advances to the next state and returns the change, `None` once the
    /// solved state has been produced. The first call reports the start
    /// state with no change.
    pub fn step(&mut self) -> Option<Option<Move>> {
        if !self.started {
            self.started = true;
            self.word.probe.emit();
            return Some(None);
        }
        let n = self.n();
        if self.spin > 0 {
            let v = (self.word.get(1) as i8 + self.spin_delta) as u8;
            self.word.set(1, v);
            self.spin -= 1;
            if self.spin == 0 {
                self.i = 2;
            }
            self.word.probe.emit();
            return Some(Some(Move::new(1, self.spin_delta)));
        }
        if self.i > n {
            return None;
        }
        let i = self.i;
        let mv = if i == 1 {
            let d = self.word.get(1);
            self.spin_delta = if d == 0 { 1 } else { -1 };
            self.word.set(1, (d as i8 + self.spin_delta) as u8);
            self.spin = 2;
            Move::new(1, self.spin_delta)
        } else {
            let wi = self.word.get(i);
            let right = self.word.get(i - 1);
            let delta: i8 = if (wi + right) % 2 == 1 { 1 } else { -1 };
            let v = (wi as i8 + delta) as u8;
            self.word.set(i, v);
            if v == 0 || v == 3 {
                self.i += 1;
            } else {
                self.i -= 1;
            }
            Move::new(i, delta)
        };
        self.word.probe.emit();
        Some(Some(mv))
    }
}

impl<P: Probe> Iterator for FastZiggu<P> {
    type Item = QuatString;

    fn next(&mut self) -> Option<QuatString> {
        self.step().map(|_| self.state())
    }
}

/// Generator with one direction bit per digit.
///
/// Digit `i` moves by its direction; on reaching 0 or 3 the direction flips and
/// the index moves left, otherwise the index moves right (staying put at
/// digit 1).
#[derive(Debug, Clone)]
pub struct FastZigguDirections<P = NoProbe> {
    word: Word<P>,
    dir: Vec<i8>,
    i: usize,
    started: bool,
}

impl FastZigguDirections<NoProbe> {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_probe(n, NoProbe)
    }
}

impl<P: Probe> FastZigguDirections<P> {
    pub fn with_probe(n: usize, probe: P) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", n, ">= 1"));
        }
        Ok(FastZigguDirections {
            word: Word { w: vec![0; n], probe },
            dir: vec![1; n],
            i: 1,
            started: false,
        })
    }

    pub fn probe(&self) -> &P {
        &self.word.probe
    }

    pub fn n(&self) -> usize {
        self.word.w.len()
    }

    pub fn state(&self) -> QuatString {
        self.word.state()
    }

    pub fn digits_from_right(&self) -> &[u8] {
        &self.word.w
    }

    /// As [`FastZiggu::step`].
    pub fn step(&mut self) -> Option<Option<Move>> {
        if !self.started {
            self.started = true;
            self.word.probe.emit();
            return Some(None);
        }
        let i = self.i;
        if i > self.n() {
            return None;
        }
        self.word.probe.read();
        let d = self.dir[i - 1];
        let v = (self.word.get(i) as i8 + d) as u8;
        self.word.set(i, v);
        if v == 0 || v == 3 {
            self.word.probe.write();
            self.dir[i - 1] = -d;
            self.i += 1;
        } else if i > 1 {
            self.i -= 1;
        }
        self.word.probe.emit();
        Some(Some(Move::new(i, d)))
    }
}

impl<P: Probe> Iterator for FastZigguDirections<P> {
    type Item = QuatString;

    fn next(&mut self) -> Option<QuatString> {
        self.step().map(|_| self.state())
    }
}
